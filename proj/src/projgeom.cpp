#include "dlcodes/projgeom.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dlcodes::projgeom {

ProjPoint normalize(std::vector<int> coords, const gf::Field& f) {
    size_t lead = coords.size();
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) {
            lead = i;
            break;
        }
    }
    if (lead == coords.size()) throw IndexOutOfRange("projective point must have a nonzero coordinate");
    const int s = f.inv(coords[lead]);
    for (size_t i = lead; i < coords.size(); ++i) coords[i] = f.mul(coords[i], s);
    return ProjPoint{std::move(coords)};
}

long long point_value(const ProjPoint& pt, const gf::Field& f) {
    long long v = 0;
    for (size_t i = pt.coords.size(); i-- > 0;) v = v * f.q() + f.ordinal_of(pt.coords[i]);
    return v;
}

std::vector<ProjPoint> enumerate_projective(int dim, const gf::Field& f) {
    if (dim < 1) throw IndexOutOfRange("projective dimension must be >= 1");
    const long long q = f.q();
    const int ncoords = dim + 1;
    std::vector<ProjPoint> out;
    out.reserve(static_cast<size_t>(projective_count(dim, q)));
    long long total = 1;
    for (int i = 0; i < ncoords; ++i) total *= q;
    std::vector<int> coords(static_cast<size_t>(ncoords));
    for (long long v = 1; v < total; ++v) {
        long long t = v;
        for (int i = 0; i < ncoords; ++i) {
            coords[static_cast<size_t>(i)] = f.code_at(static_cast<int>(t % q));
            t /= q;
        }
        int lead = -1;
        for (int i = 0; i < ncoords; ++i) {
            if (coords[static_cast<size_t>(i)] != 0) {
                lead = i;
                break;
            }
        }
        if (coords[static_cast<size_t>(lead)] == f.one()) out.push_back(ProjPoint{coords});
    }
    return out;
}

long long projective_count(int dim, long long q) {
    long long n = 0, pw = 1;
    for (int i = 0; i <= dim; ++i) {
        n += pw;
        pw *= q;
    }
    return n;
}

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const long long da = std::accumulate(a.begin(), a.end(), 0LL);
    const long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da < db;
    // Same degree: higher first exponent sorts earlier.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](int x, int y) { return x > y; });
}

namespace {
void gen_monomials(int nvars, int degree, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
    if (nvars == 1) {
        prefix.push_back(degree);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        prefix.push_back(e);
        gen_monomials(nvars - 1, degree - e, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> monomial_basis(int nvars, int degree) {
    if (nvars < 1 || degree < 0) throw IndexOutOfRange("monomial_basis: bad arguments");
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<size_t>(binomial(nvars - 1 + degree, degree)));
    std::vector<int> prefix;
    gen_monomials(nvars, degree, prefix, out);
    return out;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

HomogPoly::HomogPoly(int nvars, int degree, gf::FieldPtr field)
    : nvars_(nvars), degree_(degree), field_(std::move(field)) {
    if (nvars_ < 1) throw ArityMismatch("polynomial needs at least one variable");
    if (degree_ < 0) throw IndexOutOfRange("polynomial degree must be >= 0");
    const long long cap = field_->q() * field_->q() * field_->q() + 1;
    if (degree_ > cap) throw IndexOutOfRange("polynomial degree exceeds q^3+1 cap");
}

void HomogPoly::add_term(const std::vector<int>& expo, int coeff_code) {
    if (static_cast<int>(expo.size()) != nvars_) throw ArityMismatch("exponent vector arity mismatch");
    if (std::accumulate(expo.begin(), expo.end(), 0LL) != degree_)
        throw DegreeMismatch("exponent vector does not sum to the declared degree");
    auto it = terms_.find(expo);
    const int merged = field_->add(it == terms_.end() ? 0 : it->second, coeff_code);
    if (merged == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[expo] = merged;
    }
}

void HomogPoly::set_term(const std::vector<int>& expo, int coeff_code) {
    if (static_cast<int>(expo.size()) != nvars_) throw ArityMismatch("exponent vector arity mismatch");
    if (std::accumulate(expo.begin(), expo.end(), 0LL) != degree_)
        throw DegreeMismatch("exponent vector does not sum to the declared degree");
    if (coeff_code == 0)
        terms_.erase(expo);
    else
        terms_[expo] = coeff_code;
}

int HomogPoly::coeff(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? 0 : it->second;
}

std::string HomogPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [expo, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << field_->digits(c) << "*X^(";
        for (size_t i = 0; i < expo.size(); ++i) os << (i ? "," : "") << expo[i];
        os << ")";
    }
    if (first) os << "0";
    return os.str();
}

int eval_poly(const HomogPoly& f, const ProjPoint& pt) {
    if (f.nvars() != static_cast<int>(pt.coords.size()))
        throw ArityMismatch("polynomial arity does not match point dimension");
    const gf::Field& F = f.field();
    int acc = 0;
    for (const auto& [expo, c] : f.terms()) {
        int term = c;
        for (size_t i = 0; i < expo.size(); ++i)
            if (expo[i] > 0) term = F.mul(term, F.pow(pt.coords[i], expo[i]));
        acc = F.add(acc, term);
    }
    return acc;
}

HomogPoly poly_mul(const HomogPoly& f, const HomogPoly& g) {
    if (f.nvars() != g.nvars()) throw ArityMismatch("polynomial arities differ");
    if (!f.field().same_as(g.field())) throw FieldMismatch("polynomial fields differ");
    HomogPoly h(f.nvars(), f.degree() + g.degree(), f.field_ptr());
    const gf::Field& F = f.field();
    for (const auto& [ea, ca] : f.terms()) {
        for (const auto& [eb, cb] : g.terms()) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            h.add_term(e, F.mul(ca, cb));
        }
    }
    return h;
}

HomogPoly poly_add(const HomogPoly& f, const HomogPoly& g) {
    if (f.nvars() != g.nvars() || f.degree() != g.degree())
        throw DegreeMismatch("polynomial shapes differ");
    if (!f.field().same_as(g.field())) throw FieldMismatch("polynomial fields differ");
    HomogPoly h = f;
    for (const auto& [e, c] : g.terms()) h.add_term(e, c);
    return h;
}

HomogPoly poly_scale(const HomogPoly& f, int c) {
    HomogPoly h(f.nvars(), f.degree(), f.field_ptr());
    for (const auto& [e, a] : f.terms()) h.set_term(e, f.field().mul(a, c));
    return h;
}

std::vector<ProjPoint> enumerate_variety(const std::vector<HomogPoly>& eqs, int dim,
                                         const gf::Field& f) {
    for (const auto& eq : eqs)
        if (eq.nvars() != dim + 1) throw ArityMismatch("equation arity does not match dimension");
    std::vector<ProjPoint> out;
    for (ProjPoint& pt : enumerate_projective(dim, f)) {
        bool on = true;
        for (const auto& eq : eqs) {
            if (eval_poly(eq, pt) != 0) {
                on = false;
                break;
            }
        }
        if (on) out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace dlcodes::projgeom
