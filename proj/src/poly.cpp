#include "kklab/poly.hpp"

#include "kklab/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace kklab {

MultiPoly multipoly_zero(Field f, uint32_t nvars) {
    return MultiPoly(nvars, FieldElem::zero(f));
}

MultiPoly multipoly_constant(Field f, uint32_t nvars, const FieldElem& c) {
    require(c.field() == f, Errc::FieldMismatch, "constant field");
    MultiPoly p = multipoly_zero(f, nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly multipoly_variable(Field f, uint32_t nvars, uint32_t i) {
    return MultiPoly::variable(nvars, i, FieldElem::one(f));
}

Field field_of(const MultiPoly& p) { return p.ring_zero().field(); }

MultiPoly embed_poly(Field sup, const MultiPoly& p) {
    MultiPoly out = multipoly_zero(sup, p.nvars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, embed(sup, c));
    return out;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.to_string();
        for (uint32_t i = 0; i < p.nvars(); ++i)
            if (it->first[i]) os << "*X" << i << "^" << it->first[i];
    }
    return os.str();
}

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

MultiPoly parse_multipoly(const std::string& s, Field f, uint32_t nvars) {
    MultiPoly out = multipoly_zero(f, nvars);
    std::string body = strip(s);
    if (body.empty() || body == "0") return out;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t next = body.find(" + ", pos);
        std::string term = next == std::string::npos ? body.substr(pos)
                                                     : body.substr(pos, next - pos);
        pos = next == std::string::npos ? body.size() : next + 3;
        term = strip(term);
        require(!term.empty(), Errc::ConfigInvalid, "empty term in polynomial literal");
        // coefficient up to the first '*', then X-factors
        std::vector<std::string> parts;
        size_t tp = 0;
        while (tp < term.size()) {
            size_t star = term.find('*', tp);
            parts.push_back(term.substr(tp, star == std::string::npos ? std::string::npos
                                                                      : star - tp));
            tp = star == std::string::npos ? term.size() : star + 1;
        }
        FieldElem c = FieldElem::parse(strip(parts[0]));
        require(c.field() == f, Errc::ConfigInvalid, "coefficient from a different field");
        ExpVec e(nvars, 0);
        for (size_t i = 1; i < parts.size(); ++i) {
            std::string factor = strip(parts[i]);
            require(!factor.empty() && factor[0] == 'X', Errc::ConfigInvalid,
                    "bad factor: " + factor);
            size_t caret = factor.find('^');
            uint32_t idx, expo = 1;
            if (caret == std::string::npos) {
                idx = static_cast<uint32_t>(std::stoul(factor.substr(1)));
            } else {
                idx = static_cast<uint32_t>(std::stoul(factor.substr(1, caret - 1)));
                expo = static_cast<uint32_t>(std::stoul(factor.substr(caret + 1)));
            }
            require(idx < nvars, Errc::ConfigInvalid, "variable index out of range");
            e[idx] += expo;
        }
        out.add_term(e, c);
    }
    return out;
}

Hypersurface::Hypersurface(MultiPoly poly) : poly_(std::move(poly)), degree_(0) {
    require(!poly_.is_zero(), Errc::ZeroPolynomial, "hypersurface form is zero");
    require(poly_.nvars() >= 2, Errc::InvalidParams, "need at least two coordinates");
    int64_t d;
    require(poly_.is_homogeneous(&d), Errc::InvalidParams, "hypersurface form not homogeneous");
    require(d >= 1, Errc::InvalidParams, "hypersurface degree must be positive");
    degree_ = d;
}

namespace {

void monomials_rec(uint32_t nvars, uint32_t pos, uint32_t left, ExpVec& cur,
                   std::vector<ExpVec>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (uint32_t v = 0; v <= left; ++v) {
        cur[pos] = v;
        monomials_rec(nvars, pos + 1, left - v, cur, out);
    }
}

} // namespace

std::vector<ExpVec> monomials_of_degree(uint32_t nvars, uint32_t d) {
    require(nvars >= 1, Errc::ArityMismatch, "no variables");
    std::vector<ExpVec> out;
    ExpVec cur(nvars, 0);
    monomials_rec(nvars, 0, d, cur, out);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

MultiPoly homogenize(const UniPoly& minpoly) {
    require(!minpoly.is_zero(), Errc::ZeroPolynomial, "homogenizing zero");
    require(minpoly.is_monic(), Errc::InvalidParams, "homogenize expects a monic polynomial");
    int64_t m = minpoly.degree();
    require(m >= 1, Errc::InvalidParams, "degree must be at least one");
    Field f = minpoly.field();
    MultiPoly out = multipoly_zero(f, 2);
    for (int64_t i = 0; i <= m; ++i)
        out.add_term({static_cast<uint32_t>(i), static_cast<uint32_t>(m - i)}, minpoly.coeff(i));
    return out;
}

} // namespace kklab
