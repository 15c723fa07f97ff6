#include <string_view>

namespace kleindraw {

extern const std::string_view kAuthoredOmega;

// Convex base drawings, one per Klein-bottle embedding of K5 and K3,3, placed
// by hand on a quarter grid and relabelled to the canonical vertex order.
const std::string_view kAuthoredOmega = R"(embedding 0 K5
graph K5
vertices 5
rs 0: 1 2 3 4-
rs 1: 0 2 3- 4
rs 2: 0 1 4- 3
rs 3: 0 2 1- 4-
rs 4: 0- 2- 1 3-
vertex 0 0.5 0.5
vertex 1 0.25 0.75
vertex 2 0.5 0.25
vertex 3 0.75 0.5
vertex 4 0.75 0.75
edge 0 1 0 0
edge 0 2 0 0
edge 0 3 0 0
edge 0 4 0 0
edge 1 2 0 1
edge 1 3 -1 0
edge 1 4 -1 0
edge 2 3 0 0
edge 2 4 0 -1
edge 3 4 0 0
end
embedding 1 K5
graph K5
vertices 5
rs 0: 1 2 3 4-
rs 1: 0 2 3- 4
rs 2: 0 3- 1 4-
rs 3: 0 2- 1- 4-
rs 4: 0- 2- 1 3-
vertex 0 0.75 0.25
vertex 1 0.5625 0.4375
vertex 2 0.5 0.75
vertex 3 0.375 0.625
vertex 4 0.25 0.5
edge 0 1 0 0
edge 0 2 0 -1
edge 0 3 1 0
edge 0 4 1 0
edge 1 2 0 0
edge 1 3 0 0
edge 1 4 0 0
edge 2 3 0 0
edge 2 4 1 0
edge 3 4 0 0
end
embedding 2 K5
graph K5
vertices 5
rs 0: 1 2 3 4-
rs 1: 0 2 4 3-
rs 2: 0 1 4- 3
rs 3: 0 2 1- 4-
rs 4: 0- 2- 1 3-
vertex 0 0.5 0.75
vertex 1 0.25 0.25
vertex 2 0.5 0.5
vertex 3 0.75 0.75
vertex 4 0.75 0.25
edge 0 1 0 1
edge 0 2 0 0
edge 0 3 0 0
edge 0 4 0 1
edge 1 2 0 0
edge 1 3 -1 0
edge 1 4 -1 0
edge 2 3 0 0
edge 2 4 0 0
edge 3 4 0 1
end
embedding 3 K5
graph K5
vertices 5
rs 0: 1 2 3 4-
rs 1: 0 2 4 3-
rs 2: 0 3- 1 4-
rs 3: 0 1- 2- 4-
rs 4: 0- 2- 1 3-
vertex 0 0.25 0.75
vertex 1 0.5 0.5
vertex 2 0.25 0.25
vertex 3 0.75 0.75
vertex 4 0.75 0.25
edge 0 1 0 0
edge 0 2 0 1
edge 0 3 -1 1
edge 0 4 -1 0
edge 1 2 0 0
edge 1 3 0 0
edge 1 4 0 0
edge 2 3 0 -1
edge 2 4 -1 0
edge 3 4 0 1
end
embedding 4 K5
graph K5
vertices 5
rs 0: 1 2 3 4-
rs 1: 0 2- 3 4
rs 2: 0 1- 3- 4
rs 3: 0 1 2- 4-
rs 4: 0- 1 2 3-
vertex 0 0.75 0.75
vertex 1 0.75 0.25
vertex 2 0.25 0.375
vertex 3 0.625 0.5
vertex 4 0.25 0.625
edge 0 1 0 1
edge 0 2 1 0
edge 0 3 0 0
edge 0 4 0 0
edge 1 2 0 0
edge 1 3 0 0
edge 1 4 1 0
edge 2 3 0 0
edge 2 4 0 0
edge 3 4 0 0
end
embedding 5 K5
graph K5
vertices 5
rs 0: 1 2 3 4-
rs 1: 0 2- 3 4
rs 2: 0 1- 4 3
rs 3: 0 2 1 4-
rs 4: 0- 1 2 3-
vertex 0 0.5 0.5
vertex 1 0.5 0.75
vertex 2 0.75 0.25
vertex 3 0.5 0.25
vertex 4 0.25 0.25
edge 0 1 0 0
edge 0 2 0 0
edge 0 3 0 0
edge 0 4 0 0
edge 1 2 -1 0
edge 1 3 0 1
edge 1 4 1 0
edge 2 3 0 0
edge 2 4 1 -1
edge 3 4 0 0
end
embedding 6 K5
graph K5
vertices 5
rs 0: 1 2 3 4-
rs 1: 0 2- 4- 3
rs 2: 0 1- 4 3
rs 3: 0 2 1 4-
rs 4: 0- 2 1- 3-
vertex 0 0.5 0.25
vertex 1 0.625 0.75
vertex 2 0.25 0.375
vertex 3 0.5 0.5
vertex 4 0.75 0.5
edge 0 1 0 -1
edge 0 2 0 0
edge 0 3 0 0
edge 0 4 0 0
edge 1 2 1 0
edge 1 3 0 0
edge 1 4 0 0
edge 2 3 0 0
edge 2 4 -1 0
edge 3 4 0 0
end
embedding 7 K5
graph K5
vertices 5
rs 0: 1 2 3 4-
rs 1: 0 3- 2- 4-
rs 2: 0 1- 4 3
rs 3: 0 2 1- 4-
rs 4: 0- 2 1- 3-
vertex 0 0.25 0.25
vertex 1 0.5 0.5
vertex 2 0.75 0.75
vertex 3 0.75 0.25
vertex 4 0.25 0.75
edge 0 1 0 0
edge 0 2 -1 0
edge 0 3 -1 -1
edge 0 4 0 -1
edge 1 2 0 0
edge 1 3 0 0
edge 1 4 0 0
edge 2 3 0 1
edge 2 4 0 0
edge 3 4 1 0
end
embedding 8 K5
graph K5
vertices 5
rs 0: 1 2 4 3-
rs 1: 0 2- 4 3
rs 2: 0 3 1- 4-
rs 3: 0- 2 1 4-
rs 4: 0 1 2- 3-
vertex 0 0.75 0.75
vertex 1 0.75 0.25
vertex 2 0.25 0.25
vertex 3 0.25 0.75
vertex 4 0.5 0.5
edge 0 1 0 1
edge 0 2 1 0
edge 0 3 0 0
edge 0 4 0 0
edge 1 2 0 0
edge 1 3 1 0
edge 1 4 0 0
edge 2 3 0 -1
edge 2 4 0 0
edge 3 4 0 0
end
embedding 9 K5
graph K5
vertices 5
rs 0: 1 2 4 3-
rs 1: 0 2- 4- 3
rs 2: 0 3- 1- 4
rs 3: 0- 2- 1 4-
rs 4: 0 2 1- 3-
vertex 0 0.75 0.5
vertex 1 0.25 0.5
vertex 2 0.5 0.25
vertex 3 0.5 0.75
vertex 4 0.5 0.5
edge 0 1 1 0
edge 0 2 0 0
edge 0 3 0 0
edge 0 4 0 0
edge 1 2 0 0
edge 1 3 0 0
edge 1 4 0 0
edge 2 3 0 -1
edge 2 4 0 0
edge 3 4 0 0
end
embedding 10 K5
graph K5
vertices 5
rs 0: 1 2 4 3-
rs 1: 0 3 2- 4-
rs 2: 0 3- 1- 4
rs 3: 0- 2- 1 4-
rs 4: 0 2 1- 3-
vertex 0 0.25 0.25
vertex 1 0.75 0.75
vertex 2 0.5 0.75
vertex 3 0.5 0.5
vertex 4 0.5 0.25
edge 0 1 -1 0
edge 0 2 0 -1
edge 0 3 0 0
edge 0 4 0 0
edge 1 2 0 0
edge 1 3 0 0
edge 1 4 0 1
edge 2 3 0 0
edge 2 4 0 1
edge 3 4 0 0
end
embedding 11 K33
graph K33
vertices 6
rs 0: 1 2 3
rs 1: 0 4 5
rs 2: 0 4- 5
rs 3: 0 4 5-
rs 4: 1 2- 3
rs 5: 1 2 3-
vertex 0 0.5 0.8
vertex 1 0.5 0.2
vertex 2 0.25 0.675
vertex 3 0.75 0.675
vertex 4 0.75 0.325
vertex 5 0.25 0.325
edge 0 1 0 1
edge 0 2 0 0
edge 0 3 0 0
edge 1 4 0 0
edge 1 5 0 0
edge 2 4 -1 0
edge 2 5 0 0
edge 3 4 0 0
edge 3 5 1 0
end
embedding 12 K33
graph K33
vertices 6
rs 0: 1 2 3-
rs 1: 0 4 5-
rs 2: 0 4- 5-
rs 3: 0- 4- 5
rs 4: 1 2- 3-
rs 5: 1- 2- 3
vertex 0 0.5 0.75
vertex 1 0.5 0.25
vertex 2 0.25 0.5
vertex 3 0.575 0.575
vertex 4 0.75 0.5
vertex 5 0.425 0.425
edge 0 1 0 1
edge 0 2 0 0
edge 0 3 0 0
edge 1 4 0 0
edge 1 5 0 0
edge 2 4 -1 0
edge 2 5 0 0
edge 3 4 0 0
edge 3 5 0 0
end
)";

}  // namespace kleindraw
