#include "gtp/uea.hpp"

#include <sstream>

namespace gtp {

UEAElement UEAElement::scalar(const Rational& c) { return monomial({}, c); }

UEAElement UEAElement::monomial(const Mono& m, const Rational& c) {
    UEAElement e;
    if (!c.is_zero()) e.terms_.emplace(m, c);
    return e;
}

Rational UEAElement::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void UEAElement::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UEAElement UEAElement::operator-() const {
    UEAElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

UEAElement& UEAElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

UEAElement UEAElement::homogeneous_part(int degree) const {
    UEAElement r;
    for (const auto& [m, c] : terms_)
        if (mono_degree(m) == degree) r.terms_.emplace(m, c);
    return r;
}

int mono_degree(const Mono& m) { return static_cast<int>(m.size()); }

// ---------------------------------------------------------------- UEA

UEA::UEA(const ChevalleyAlgebra& g) : g_(g) {}

UEAElement UEA::gen(int index) const {
    return UEAElement::monomial(Mono{static_cast<std::uint8_t>(index)});
}

UEAElement UEA::gen(std::string_view label) const { return gen(g_.index(label)); }

UEAElement UEA::cartan(std::string_view label) const {
    auto lc = g_.cartan_element(label);
    if (!lc) throw MathError("unknown Cartan element " + std::string(label));
    UEAElement r;
    for (const auto& [x, c] : *lc) r.add_term(Mono{static_cast<std::uint8_t>(x)}, c);
    return r;
}

UEA::ElemPtr UEA::mono_times_gen(const Mono& m, int x) const {
    if (m.empty() || m.back() <= x) {
        Mono r = m;
        r.push_back(static_cast<std::uint8_t>(x));
        return std::make_shared<const UEAElement>(UEAElement::monomial(r));
    }
    std::string key(m.begin(), m.end());
    key.push_back(static_cast<char>(x));
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    // M'.y.x = (M'.x).y + M'.[y,x]
    const int y = m.back();
    Mono head(m.begin(), m.end() - 1);
    UEAElement out;
    ElemPtr left = mono_times_gen(head, x);
    for (const auto& [n, c] : left->terms()) {
        ElemPtr t = mono_times_gen(n, y);
        for (const auto& [n2, c2] : t->terms()) out.add_term(n2, c * c2);
    }
    for (const auto& [z, c] : g_.bracket[y][x]) {
        ElemPtr t = mono_times_gen(head, z);
        for (const auto& [n2, c2] : t->terms()) out.add_term(n2, c * c2);
    }
    auto ptr = std::make_shared<const UEAElement>(std::move(out));
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(key, ptr).first->second;
}

UEAElement UEA::mul_gen(const UEAElement& a, int x) const {
    UEAElement out;
    for (const auto& [m, c] : a.terms()) {
        ElemPtr t = mono_times_gen(m, x);
        for (const auto& [n, c2] : t->terms()) out.add_term(n, c * c2);
    }
    return out;
}

UEAElement UEA::multiply(const UEAElement& a, const UEAElement& b) const {
    UEAElement out;
    for (const auto& [n, cb] : b.terms()) {
        UEAElement t = a;
        for (auto letter : n) t = mul_gen(t, letter);
        t *= cb;
        out += t;
    }
    return out;
}

UEAElement UEA::commutator(const UEAElement& a, const UEAElement& b) const {
    return multiply(a, b) - multiply(b, a);
}

UEAElement UEA::power(const UEAElement& a, unsigned e) const {
    UEAElement r = unit();
    for (unsigned n = 0; n < e; ++n) r = multiply(r, a);
    return r;
}

UEAElement UEA::word_to_element(const std::vector<int>& letters) const {
    UEAElement r = unit();
    for (int x : letters) r = mul_gen(r, x);
    return r;
}

std::vector<int> UEA::parse_word(std::string_view word) const {
    std::vector<int> out;
    std::istringstream is{std::string(word)};
    std::string tok;
    while (is >> tok) {
        int rep = 1;
        if (auto p = tok.find('^'); p != std::string::npos) {
            rep = std::stoi(tok.substr(p + 1));
            tok = tok.substr(0, p);
        }
        int x = g_.index(tok);
        for (int n = 0; n < rep; ++n) out.push_back(x);
    }
    return out;
}

UEAElement UEA::word_to_element(std::string_view word) const { return word_to_element(parse_word(word)); }

Root UEA::mono_weight(const Mono& m) const {
    Root w;
    for (auto x : m) w = w + g_.gens[x].root;
    return w;
}

std::optional<Root> UEA::weight_of(const UEAElement& x) const {
    std::optional<Root> w;
    for (const auto& [m, c] : x.terms()) {
        Root r = mono_weight(m);
        if (w && *w != r) return std::nullopt;
        w = r;
    }
    return w ? w : Root{};
}

int UEA::degree_of(const UEAElement& x) const {
    if (x.is_zero()) throw MathError("degree of the zero element");
    int d = 0;
    for (const auto& [m, c] : x.terms()) d = std::max(d, mono_degree(m));
    return d;
}

std::string UEA::mono_str(const Mono& m) const {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t t = 0; t < m.size();) {
        std::size_t r = t;
        while (r < m.size() && m[r] == m[t]) ++r;
        if (!s.empty()) s += "*";
        s += g_.gens[m[t]].label;
        if (r - t > 1) s += "^" + std::to_string(r - t);
        t = r;
    }
    return s;
}

std::string UEA::str(const UEAElement& x) const {
    if (x.is_zero()) return "0";
    std::string s;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) s += "-";
        Rational a = c.abs();
        if (m.empty()) s += a.str();
        else if (a == Rational(1)) s += mono_str(m);
        else s += a.str() + "*" + mono_str(m);
    }
    return s;
}

std::size_t UEA::memo_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.size();
}

const UEA& uea(AlgebraId id) {
    static const UEA a2(algebra(AlgebraId::A2));
    static const UEA c2(algebra(AlgebraId::C2));
    static const UEA g2(algebra(AlgebraId::G2));
    switch (id) {
        case AlgebraId::A2: return a2;
        case AlgebraId::C2: return c2;
        case AlgebraId::G2: break;
    }
    return g2;
}

}  // namespace gtp
