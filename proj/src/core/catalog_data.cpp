#include "core/relation.hpp"

namespace zefav {

// FewRel benchmark relation inventory (100 relation types). Keep in sync
// with data/fewrel_relations.txt.
const char* const kFewRelRelationNames[] = {
    "place served by transport hub",
    "mountain range",
    "religion",
    "participating team",
    "contains administrative territorial entity",
    "head of government",
    "country of citizenship",
    "original network",
    "heritage designation",
    "performer",
    "participant of",
    "position held",
    "has part",
    "location of formation",
    "located on terrain feature",
    "architect",
    "country of origin",
    "publisher",
    "director",
    "father",
    "developer",
    "military branch",
    "mouth of the watercourse",
    "nominated for",
    "movement",
    "successful candidate",
    "followed by",
    "manufacturer",
    "instance of",
    "after a work by",
    "member of political party",
    "licensed to broadcast to",
    "headquarters location",
    "sibling",
    "instrument",
    "country",
    "occupation",
    "residence",
    "work location",
    "subsidiary",
    "participant",
    "operator",
    "characters",
    "occupant",
    "genre",
    "operating system",
    "owned by",
    "platform",
    "tributary",
    "winner",
    "said to be the same as",
    "composer",
    "league",
    "record label",
    "distributor",
    "screenwriter",
    "sports season of league or competition",
    "taxon rank",
    "location",
    "field of work",
    "language of work or name",
    "applies to jurisdiction",
    "notable work",
    "located in the administrative territorial entity",
    "crosses",
    "original language of film or TV show",
    "competition class",
    "part of",
    "sport",
    "constellation",
    "position played on team / speciality",
    "located in or next to body of water",
    "voice type",
    "follows",
    "spouse",
    "military rank",
    "mother",
    "member of",
    "child",
    "main subject",
    "capital of",
    "place of birth",
    "place of death",
    "educated at",
    "employer",
    "award received",
    "creator",
    "author",
    "production company",
    "narrative location",
    "official language",
    "currency",
    "continent",
    "shares border with",
    "named after",
    "basin country",
    "located in time zone",
    "derivative work",
    "lyrics by",
    "cast member",
};

const std::size_t kFewRelRelationCount = sizeof(kFewRelRelationNames) / sizeof(kFewRelRelationNames[0]);

}  // namespace zefav
