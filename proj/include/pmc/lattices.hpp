#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pmc/count.hpp"
#include "pmc/multigraph.hpp"

namespace pmc {

enum class Family { HexT, R_T, R_C, R_F, K_T, K_C, K_F, SG2, Gn };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Names a generated instance: n, m for grid families; stage for the
// Sierpinski pair (SG2 = the gasket, Gn = its cubic-with-pendants
// companion whose line graph the gasket is).
struct LatticeSpec {
    Family family;
    int n = 0;
    int m = 0;
    int stage = 0;
};

// Brick-wall hexagonal torus: vertices (i,j,s) for 0 <= i <= m,
// 0 <= j <= n, s in {A,B}, id 2*(i*(n+1)+j)+s. Per cell the three edges
//   A(i,j)-B(i,j), A(i,j)-B(i,j-1 mod n+1), A(i,j)-B(i-1 mod m+1,j)
// get consecutive ids. Cubic and connected with 2(m+1)(n+1) vertices.
// n = 0 or m = 0 wraps onto parallel edges; allowed, flagged degenerate.
struct HexTorus {
    MultiGraph graph;
    std::vector<EdgeId> wrap_i;  // the n+1 edges A(0,j)-B(m,j)
    std::vector<EdgeId> wrap_j;  // the m+1 edges A(i,0)-B(i,n)
    bool degenerate;
};
HexTorus hex_torus(int n, int m);

// Hexagonal torus with wrap edges opened: each listed wrap edge (x,y) is
// replaced by pendant edges (x,p) and (y,q). outer_pendants collects the
// q side (the one the Kagome cut constructions delete).
struct CutHex {
    MultiGraph graph;
    std::vector<EdgeId> pendant_edges;
    std::vector<VertexId> outer_pendants;
};
CutHex hex_cut_cylinder(int n, int m);  // i-direction wraps opened
CutHex hex_cut_free(int n, int m);      // both wrap directions opened

// Subdivide once every edge whose id is not listed in keep.
MultiGraph subdivide_except(const MultiGraph& g, const std::vector<EdgeId>& keep);

// Recursive companion of the Sierpinski gasket: stage 0 is the 3-star;
// stage k+1 joins three stage-k copies cyclically, each junction deleting
// one corner pendant from either copy and bridging their neighbors.
// 3^k + 3 vertices with degree census {3: 3^k, 1: 3}.
struct CompanionGraph {
    MultiGraph graph;
    std::array<VertexId, 3> corners;  // the un-merged pendants
};
CompanionGraph sierpinski_companion(int stage);

MultiGraph gen_hex_torus(int n, int m);
MultiGraph gen_3_12_12(char bc, int n, int m);  // bc in {'T','C','F'}
MultiGraph gen_kagome(char bc, int n, int m);
MultiGraph gen_sierpinski_companion(int stage);
MultiGraph gen_sierpinski(int stage);

MultiGraph generate(const LatticeSpec& spec);
bool is_degenerate(const LatticeSpec& spec);

// Closed-form matching count and entropy limit for a family instance.
// pow2_exponent absent means the predicted count is 0 (even-stage
// gaskets). No closed form exists for HexT or Gn themselves.
struct FamilyPrediction {
    std::optional<long long> pow2_exponent;
    double entropy_limit;
    std::string normalizer;
};
FamilyPrediction predict(const LatticeSpec& spec);

// Analytic entropy limits.
double entropy_limit_3_12_12();         // (1/3) ln 2
double entropy_limit_kagome();          // (2/3) ln 2
double entropy_limit_sierpinski();      // (2/3) ln 2, odd stages
double entropy_limit_clique_inserted(); // (1/3) ln 2

enum class EntropyNormalizer { Vertices, Paper3_12_12 };

// Finite-size entropy: 2 ln(count)/|V| for the vertex normalizer, or
// ln(count)/(3(m+1)(n+1)) with parameters taken from spec (required for
// the latter). The count must be positive.
double finite_entropy(const MultiGraph& g, const CountResult& count, EntropyNormalizer norm,
                      const LatticeSpec* spec = nullptr);

// log of an exact positive integer, accurate to double rounding
double log_mpz(const mpz_class& value);

}  // namespace pmc
