#ifndef KKLAB_POINTS_HPP
#define KKLAB_POINTS_HPP

#include "kklab/poly.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kklab {

// Intersection of hypersurfaces in a common projective space over a common
// field.
class Variety {
public:
    explicit Variety(std::vector<Hypersurface> forms);

    const std::vector<Hypersurface>& forms() const { return forms_; }
    Field field() const { return forms_.front().field(); }
    uint32_t nvars() const { return forms_.front().poly().nvars(); }
    uint32_t ambient_dim() const { return nvars() - 1; }

private:
    std::vector<Hypersurface> forms_;
};

// Projective point, normalized so the first nonzero coordinate is 1.
struct ProjPoint {
    std::vector<FieldElem> coords;

    static ProjPoint normalized(std::vector<FieldElem> raw);
    std::string to_string() const;
    bool operator==(const ProjPoint& o) const { return coords == o.coords; }
};

// All common projective zeros over ext_field (the variety's coefficients are
// embedded canonically). Lexicographic order on normalized coordinate
// vectors, coordinates compared by rank.
std::vector<ProjPoint> enumerate_points(const Variety& v, Field ext_field);

// Early-exit existence check over F_{q^ext_degree}.
bool has_point_over(const Variety& v, uint32_t ext_degree);
bool has_point(const Variety& v, Field ext_field);

struct IndexReport {
    std::set<uint32_t> degrees_with_points; // j <= bound with points over F_{q^j}
    std::optional<uint64_t> index;          // gcd; empty when no points up to bound
    uint32_t bound = 0;
};

// gcd of the extension degrees j <= degree_bound where the variety acquires
// points.
IndexReport index(const Variety& v, uint32_t degree_bound);

struct CwScanReport {
    std::string field_tag;
    uint32_t n = 0;
    uint32_t d = 0;
    uint64_t forms_checked = 0;
    bool exhaustive = false;
    bool all_have_points = false;
    std::string witness; // counterexample form, when any
};

// Checks that nonzero degree-d forms in n+1 variables over f have projective
// points (d <= n). sample = nullopt scans all forms up to scalar; otherwise
// `sample` seeded random forms.
CwScanReport cw_scan(Field f, uint32_t n, uint32_t d, std::optional<uint64_t> sample,
                     uint64_t seed);

struct IndexDivisibilityEntry {
    int64_t mu;
    uint64_t gcd_value;   // gcd(I(Z), I(previous iterate))
    uint64_t iterate_index;
    bool divides;
};

struct IndexDivisibilityReport {
    std::vector<IndexDivisibilityEntry> entries;
    bool all_divide = true;
};

// For mu = 2..mu_max: gcd(I(Z), I(Phi^(mu-1))) divides I(Phi^(mu)), indices
// computed up to `bound`. Z is the intersection of Zs; phi gives the base
// form.
IndexDivisibilityReport index_divisibility_check(const std::vector<Hypersurface>& Zs,
                                                 const Hypersurface& phi, int64_t mu_max,
                                                 uint32_t bound);

} // namespace kklab

#endif
