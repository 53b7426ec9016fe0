#include <fano3lab/errors.hpp>
#include <fano3lab/polynomial.hpp>

#include <algorithm>

namespace fano3lab {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const CycNum& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t i) {
    MultiPoly p(std::move(vars));
    Exponent e(p.vars_.size(), 0);
    e.at(i) = 1;
    p.add_term(e, CycNum(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

CycNum MultiPoly::constant_value() const {
    if (!is_constant()) raise("ParseError", "expression is not constant");
    return terms_.empty() ? CycNum(0) : terms_.begin()->second;
}

CycNum MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycNum(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const CycNum& c) {
    if (e.size() != vars_.size()) raise("OutOfRange", "exponent length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (unsigned k : e) s += static_cast<int>(k);
        d = std::max(d, s);
    }
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (unsigned k : e) s += static_cast<int>(k);
        if (d >= 0 && s != d) return false;
        d = s;
    }
    return true;
}

CycNum MultiPoly::eval(const std::vector<CycNum>& pt) const {
    if (pt.size() != vars_.size()) raise("OutOfRange", "evaluation point has wrong length");
    std::vector<std::vector<CycNum>> pw(vars_.size());
    CycNum acc(0);
    for (const auto& [e, c] : terms_) {
        CycNum t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            auto& cache = pw[i];
            if (cache.empty()) cache.push_back(CycNum(1));
            while (cache.size() <= e[i]) cache.push_back(cache.back() * pt[i]);
            t = t * cache[e[i]];
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (!e[var]) continue;
        Exponent f = e;
        --f[var];
        r.add_term(f, CycNum(static_cast<long>(e[var])) * c);
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly acc = constant(vars_, 1), base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size()) raise("OutOfRange", "substitute: wrong number of images");
    std::vector<std::string> nv = images.empty() ? std::vector<std::string>{} : images[0].vars_;
    std::vector<std::vector<MultiPoly>> pw(vars_.size());
    MultiPoly acc(nv);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(nv, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            auto& cache = pw[i];
            if (cache.empty()) cache.push_back(constant(nv, 1));
            while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
            t = t * cache[e[i]];
        }
        acc = acc + t;
    }
    return acc;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& vars) const {
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) {
            bool used = std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] != 0; });
            if (used) raise("ParseError", "variable '" + vars_[i] + "' not allowed here");
            map[i] = vars.size();
            continue;
        }
        map[i] = static_cast<std::size_t>(it - vars.begin());
    }
    MultiPoly r(vars);
    for (const auto& [e, c] : terms_) {
        Exponent f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) f[map[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

MultiPoly MultiPoly::normalized() const {
    if (terms_.empty()) return *this;
    return terms_.begin()->second.inverse() * *this;
}

namespace {

void check_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.variables() != b.variables()) raise("OutOfRange", "polynomials over different variables");
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_vars(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_vars(a, b);
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly operator*(const CycNum& s, const MultiPoly& a) {
    MultiPoly r(a.vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coef = c.to_string();
        bool simple = c.is_rational();
        std::string term;
        if (mono.empty())
            term = simple ? coef : "(" + coef + ")";
        else if (c.is_one())
            term = mono;
        else if (c == CycNum(-1))
            term = "-" + mono;
        else
            term = (simple ? coef : "(" + coef + ")") + "*" + mono;
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

bool proj_eq(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() && g.is_zero()) raise("BothZero", "proj_eq: both polynomials are zero");
    if (f.is_zero() || g.is_zero()) return false;
    MultiPoly a = f.with_variables(g.variables());
    return a.normalized() == g.normalized();
}

BinaryForm to_binary_form(const MultiPoly& p, const std::string& x, const std::string& y) {
    MultiPoly q = p.with_variables({x, y});
    if (!q.is_homogeneous()) raise("ParseError", "binary form is not homogeneous");
    int d = std::max(q.total_degree(), 0);
    BinaryForm f = BinaryForm::zero(d);
    for (const auto& [e, c] : q.terms()) f[e[1]] = c;
    return f;
}

MultiPoly to_multipoly(const BinaryForm& f, const std::string& x, const std::string& y) {
    MultiPoly p({x, y});
    unsigned d = f.degree();
    for (unsigned k = 0; k <= d; ++k) p.add_term({d - k, k}, f[k]);
    return p;
}

}  // namespace fano3lab
