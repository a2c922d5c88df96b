#include "kklab/points.hpp"

#include "kklab/lang.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace kklab {

namespace {

constexpr uint64_t kEnumCap = 100000000; // projective points per scan

// Form compiled for repeated evaluation over one field: coefficients
// embedded once, terms as sparse (variable, exponent) factor lists.
struct CompiledForm {
    struct Term {
        FieldElem coeff;
        std::vector<std::pair<uint32_t, uint32_t>> factors;
    };
    std::vector<Term> terms;
    std::vector<uint32_t> max_exp; // per variable

    CompiledForm(const MultiPoly& p, Field ext) {
        max_exp.assign(p.nvars(), 0);
        for (const auto& [e, c] : p.terms()) {
            Term t{embed(ext, c), {}};
            for (uint32_t i = 0; i < e.size(); ++i)
                if (e[i]) {
                    t.factors.emplace_back(i, e[i]);
                    max_exp[i] = std::max(max_exp[i], e[i]);
                }
            terms.push_back(std::move(t));
        }
    }

    // powers[i][k] must hold point[i]^k for k <= max_exp[i]
    FieldElem eval(const std::vector<std::vector<FieldElem>>& powers, Field ext) const {
        FieldElem acc = FieldElem::zero(ext);
        for (const auto& t : terms) {
            FieldElem v = t.coeff;
            for (const auto& [var, e] : t.factors) v = v * powers[var][e];
            acc = acc + v;
        }
        return acc;
    }
};

uint64_t proj_point_count(uint64_t q, uint32_t nvars) {
    // (q^nvars - 1) / (q - 1), with an overflow guard against the cap
    uint64_t total = 0, power = 1;
    for (uint32_t i = 0; i < nvars; ++i) {
        total += power;
        require(total <= 4 * kEnumCap, Errc::SizeExceeded, "projective space too large");
        if (i + 1 < nvars) {
            require(power <= 4 * kEnumCap / q, Errc::SizeExceeded, "projective space too large");
            power *= q;
        }
    }
    return total;
}

// Visits normalized projective points in lexicographic coordinate order.
// Callback returns false to stop the scan early.
template <class Fn>
void for_each_projective_point(Field ext, uint32_t nvars, Fn&& fn) {
    uint64_t q = ext.size();
    require(proj_point_count(q, nvars) <= kEnumCap, Errc::SizeExceeded,
            "enumeration exceeds the point cap");
    std::vector<FieldElem> coords(nvars, FieldElem::zero(ext));
    // lex order: later leading positions come first ([0:...:0:1] is minimal)
    for (uint32_t lead = nvars; lead-- > 0;) {
        for (uint32_t i = 0; i < nvars; ++i) coords[i] = FieldElem::zero(ext);
        coords[lead] = FieldElem::one(ext);
        uint32_t free_vars = nvars - lead - 1;
        std::vector<uint64_t> odo(free_vars, 0);
        for (;;) {
            for (uint32_t i = 0; i < free_vars; ++i)
                coords[lead + 1 + i] = FieldElem(ext, odo[i]);
            if (!fn(coords)) return;
            uint32_t i = free_vars;
            bool done = true;
            while (i-- > 0) {
                if (++odo[i] < q) {
                    done = false;
                    break;
                }
                odo[i] = 0;
            }
            if (done) break;
        }
    }
}

struct CompiledVariety {
    std::vector<CompiledForm> forms;
    std::vector<uint32_t> max_exp; // combined, per variable
};

CompiledVariety compile_variety(const Variety& v, Field ext) {
    require(v.field().p() == ext.p() && ext.degree() % v.field().degree() == 0,
            Errc::NotSubfield, "extension does not contain the base field");
    CompiledVariety out;
    out.max_exp.assign(v.nvars(), 0);
    out.forms.reserve(v.forms().size());
    for (const auto& h : v.forms()) {
        out.forms.emplace_back(h.poly(), ext);
        for (uint32_t i = 0; i < v.nvars(); ++i)
            out.max_exp[i] = std::max(out.max_exp[i], out.forms.back().max_exp[i]);
    }
    return out;
}

bool on_all_forms(const CompiledVariety& cv, Field ext, const std::vector<FieldElem>& coords,
                  std::vector<std::vector<FieldElem>>& powers) {
    for (uint32_t i = 0; i < coords.size(); ++i) {
        auto& pw = powers[i];
        for (uint32_t k = 1; k <= cv.max_exp[i]; ++k) pw[k] = pw[k - 1] * coords[i];
    }
    for (const auto& f : cv.forms)
        if (!f.eval(powers, ext).is_zero()) return false;
    return true;
}

std::vector<std::vector<FieldElem>> make_power_buffers(const CompiledVariety& cv, Field ext) {
    std::vector<std::vector<FieldElem>> powers(cv.max_exp.size());
    for (size_t i = 0; i < cv.max_exp.size(); ++i)
        powers[i].assign(cv.max_exp[i] + 1, FieldElem::one(ext));
    return powers;
}

} // namespace

Variety::Variety(std::vector<Hypersurface> forms) : forms_(std::move(forms)) {
    require(!forms_.empty(), Errc::InvalidParams, "a variety needs at least one form");
    for (const auto& h : forms_) {
        require(h.field() == forms_.front().field(), Errc::FieldMismatch,
                "forms over different fields");
        require(h.poly().nvars() == forms_.front().poly().nvars(), Errc::ArityMismatch,
                "forms in different ambient spaces");
    }
}

ProjPoint ProjPoint::normalized(std::vector<FieldElem> raw) {
    require(!raw.empty(), Errc::InvalidParams, "empty coordinate vector");
    size_t lead = raw.size();
    for (size_t i = 0; i < raw.size(); ++i)
        if (!raw[i].is_zero()) {
            lead = i;
            break;
        }
    require(lead < raw.size(), Errc::InvalidParams, "the zero vector is not projective");
    FieldElem inv = raw[lead].inv();
    for (auto& c : raw) c = c * inv;
    return ProjPoint{std::move(raw)};
}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ":";
        os << coords[i].to_string();
    }
    os << "]";
    return os.str();
}

std::vector<ProjPoint> enumerate_points(const Variety& v, Field ext_field) {
    auto cv = compile_variety(v, ext_field);
    std::vector<ProjPoint> out;
    auto powers = make_power_buffers(cv, ext_field);
    for_each_projective_point(ext_field, v.nvars(), [&](const std::vector<FieldElem>& coords) {
        if (on_all_forms(cv, ext_field, coords, powers)) out.push_back(ProjPoint{coords});
        return true;
    });
    std::sort(out.begin(), out.end(), [](const ProjPoint& a, const ProjPoint& b) {
        for (size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i].rank() != b.coords[i].rank())
                return a.coords[i].rank() < b.coords[i].rank();
        }
        return false;
    });
    return out;
}

bool has_point(const Variety& v, Field ext_field) {
    auto cv = compile_variety(v, ext_field);
    bool found = false;
    auto powers = make_power_buffers(cv, ext_field);
    for_each_projective_point(ext_field, v.nvars(), [&](const std::vector<FieldElem>& coords) {
        if (on_all_forms(cv, ext_field, coords, powers)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

bool has_point_over(const Variety& v, uint32_t ext_degree) {
    require(ext_degree >= 1, Errc::InvalidParams, "extension degree must be positive");
    Field base = v.field();
    Field ext = make_field(base.p(), base.degree() * ext_degree);
    return has_point(v, ext);
}

IndexReport index(const Variety& v, uint32_t degree_bound) {
    require(degree_bound >= 1, Errc::InvalidParams, "degree bound must be positive");
    IndexReport rep;
    rep.bound = degree_bound;
    uint64_t g = 0;
    for (uint32_t j = 1; j <= degree_bound; ++j) {
        if (has_point_over(v, j)) {
            rep.degrees_with_points.insert(j);
            g = std::gcd(g, static_cast<uint64_t>(j));
        }
    }
    if (g) rep.index = g;
    return rep;
}

CwScanReport cw_scan(Field f, uint32_t n, uint32_t d, std::optional<uint64_t> sample,
                     uint64_t seed) {
    require(d >= 1, Errc::InvalidParams, "degree must be positive");
    require(d <= n, Errc::HypothesisViolated, "Chevalley-Warning needs d <= n");
    CwScanReport rep;
    rep.field_tag = f.tag();
    rep.n = n;
    rep.d = d;
    rep.exhaustive = !sample.has_value();
    rep.all_have_points = true;

    auto mons = monomials_of_degree(n + 1, d);
    uint64_t q = f.size();

    auto check_form = [&](const std::vector<uint64_t>& coeff_ranks) {
        MultiPoly p = multipoly_zero(f, n + 1);
        for (size_t i = 0; i < mons.size(); ++i)
            if (coeff_ranks[i]) p.add_term(mons[i], FieldElem(f, coeff_ranks[i]));
        if (p.is_zero()) return true; // skip the zero form
        Variety v({Hypersurface(p)});
        ++rep.forms_checked;
        if (!has_point(v, f)) {
            rep.all_have_points = false;
            rep.witness = to_string(p);
            return false;
        }
        return true;
    };

    if (!sample) {
        // all forms up to scalar: first nonzero coefficient normalized to 1
        uint64_t nmons = mons.size();
        std::vector<uint64_t> ranks(nmons, 0);
        for (uint64_t lead = 0; lead < nmons; ++lead) {
            std::fill(ranks.begin(), ranks.end(), 0);
            ranks[lead] = 1;
            uint64_t free_vars = nmons - lead - 1;
            std::vector<uint64_t> odo(free_vars, 0);
            for (;;) {
                for (uint64_t i = 0; i < free_vars; ++i) ranks[lead + 1 + i] = odo[i];
                if (!check_form(ranks)) return rep;
                uint64_t i = free_vars;
                bool done = true;
                while (i-- > 0) {
                    if (++odo[i] < q) {
                        done = false;
                        break;
                    }
                    odo[i] = 0;
                }
                if (done) break;
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<uint64_t> dist(0, q - 1);
        for (uint64_t s = 0; s < *sample; ++s) {
            std::vector<uint64_t> ranks(mons.size());
            bool nonzero = false;
            do {
                nonzero = false;
                for (auto& r : ranks) {
                    r = dist(rng);
                    nonzero = nonzero || r != 0;
                }
            } while (!nonzero);
            if (!check_form(ranks)) return rep;
        }
    }
    return rep;
}

IndexDivisibilityReport index_divisibility_check(const std::vector<Hypersurface>& Zs,
                                                 const Hypersurface& phi, int64_t mu_max,
                                                 uint32_t bound) {
    require(mu_max >= 1, Errc::InvalidParams, "mu_max must be positive");
    Variety intersection(Zs);
    IndexReport z_index = index(intersection, bound);

    std::vector<MultiPoly> fs;
    fs.reserve(Zs.size());
    for (const auto& h : Zs) fs.push_back(h.poly());

    IndexDivisibilityReport rep;
    std::optional<uint64_t> prev_index; // I(Phi^(mu-1))
    for (int64_t mu = 1; mu <= mu_max; ++mu) {
        MultiPoly iterate = lang_compose(phi.poly(), fs, mu);
        require(!iterate.is_zero(), Errc::InvalidParams, "iterate vanished identically");
        IndexReport it_index = index(Variety({Hypersurface(iterate)}), bound);
        if (mu >= 2) {
            // gcd over an empty point set stays undetermined; only assert when
            // all three indices were determined at this bound
            if (z_index.index && prev_index && it_index.index) {
                uint64_t g = std::gcd(*z_index.index, *prev_index);
                bool ok = *it_index.index % g == 0;
                rep.entries.push_back({mu, g, *it_index.index, ok});
                rep.all_divide = rep.all_divide && ok;
            }
        }
        prev_index = it_index.index;
    }
    return rep;
}

} // namespace kklab
