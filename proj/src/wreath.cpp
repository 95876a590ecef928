#include "tiealg/wreath.hpp"

#include <algorithm>

#include "tiealg/errors.hpp"
#include "tiealg/word.hpp"

namespace tiealg {

SignedPermutation::SignedPermutation(int n)
    : perm_(n), flips_(static_cast<std::size_t>(n), 0) {}

SignedPermutation::SignedPermutation(Permutation perm, std::vector<int> flips)
    : perm_(std::move(perm)), flips_(std::move(flips)) {
    if (static_cast<int>(flips_.size()) != perm_.size())
        throw AmbientMismatch("flip vector length must equal the permutation degree");
    for (int bit : flips_)
        if (bit != 0 && bit != 1) throw IndexOutOfRange("flip bits must be 0 or 1");
}

SignedPermutation SignedPermutation::crossing(int n, int i) {
    return SignedPermutation(Permutation::transposition(n, i),
                             std::vector<int>(static_cast<std::size_t>(n), 0));
}

SignedPermutation SignedPermutation::flip(int n, int r) {
    if (r < 1 || r > n)
        throw IndexOutOfRange("flip index " + std::to_string(r) + " outside 1.." +
                              std::to_string(n));
    std::vector<int> flips(static_cast<std::size_t>(n), 0);
    flips[static_cast<std::size_t>(r - 1)] = 1;
    return SignedPermutation(Permutation::identity(n), std::move(flips));
}

bool SignedPermutation::has_flips() const {
    return std::any_of(flips_.begin(), flips_.end(), [](int b) { return b != 0; });
}

SignedPermutation SignedPermutation::inverse() const {
    const Permutation inv = perm_.inverse();
    std::vector<int> flips(flips_.size(), 0);
    for (int x = 1; x <= size(); ++x)
        flips[static_cast<std::size_t>(x - 1)] =
            flips_[static_cast<std::size_t>(inv.apply(x) - 1)];
    return SignedPermutation(inv, std::move(flips));
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.size() != b.size())
        throw AmbientMismatch("multiplying signed permutations of different degrees");
    std::vector<int> flips(a.flips_.size(), 0);
    for (int x = 1; x <= a.size(); ++x)
        flips[static_cast<std::size_t>(x - 1)] =
            a.flips_[static_cast<std::size_t>(x - 1)] ^
            b.flips_[static_cast<std::size_t>(a.perm_.apply(x) - 1)];
    return SignedPermutation(a.perm_ * b.perm_, std::move(flips));
}

bool SignedPermutation::operator<(const SignedPermutation& other) const {
    if (perm_.one_line() != other.perm_.one_line())
        return perm_.one_line() < other.perm_.one_line();
    return flips_ < other.flips_;
}

std::string SignedPermutation::to_string() const {
    std::string out = perm_.to_string();
    if (has_flips()) {
        out += "*";
        for (int r = 1; r <= size(); ++r)
            if (flips_[static_cast<std::size_t>(r - 1)]) out += "t" + std::to_string(r);
    }
    return out;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    TIEALG_CHECK(n >= 1 && n <= 5);
    std::vector<SignedPermutation> out;
    for (const Permutation& p : all_permutations(n)) {
        std::vector<int> flips(static_cast<std::size_t>(n), 0);
        for (;;) {
            out.emplace_back(p, flips);
            int carry = 0;
            while (carry < n && flips[static_cast<std::size_t>(carry)] == 1) {
                flips[static_cast<std::size_t>(carry)] = 0;
                ++carry;
            }
            if (carry == n) break;
            flips[static_cast<std::size_t>(carry)] = 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

WreathAlgebraElement::WreathAlgebraElement(int n) : ambient_(n) { TIEALG_CHECK(n >= 1); }

WreathAlgebraElement WreathAlgebraElement::one(int n) {
    return single(SignedPermutation(n));
}

WreathAlgebraElement WreathAlgebraElement::single(const SignedPermutation& g,
                                                  const BigRational& coeff) {
    WreathAlgebraElement out(g.size());
    out.add_term(g, coeff);
    return out;
}

BigRational WreathAlgebraElement::coefficient(const SignedPermutation& g) const {
    const auto it = terms_.find(g);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void WreathAlgebraElement::add_term(const SignedPermutation& g, const BigRational& coeff) {
    if (g.size() != ambient_) throw AmbientMismatch("term degree does not match the algebra");
    const auto [it, inserted] = terms_.emplace(g, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == BigRational(0)) terms_.erase(it);
    } else if (coeff == BigRational(0)) {
        terms_.erase(it);
    }
}

WreathAlgebraElement& WreathAlgebraElement::operator+=(const WreathAlgebraElement& other) {
    if (ambient_ != other.ambient_) throw AmbientMismatch("adding over different degrees");
    for (const auto& [g, c] : other.terms_) add_term(g, c);
    return *this;
}

WreathAlgebraElement& WreathAlgebraElement::operator-=(const WreathAlgebraElement& other) {
    if (ambient_ != other.ambient_) throw AmbientMismatch("subtracting over different degrees");
    for (const auto& [g, c] : other.terms_) add_term(g, -c);
    return *this;
}

WreathAlgebraElement operator*(const WreathAlgebraElement& a, const WreathAlgebraElement& b) {
    if (a.ambient_ != b.ambient_) throw AmbientMismatch("multiplying over different degrees");
    WreathAlgebraElement out(a.ambient_);
    for (const auto& [g, cg] : a.terms_)
        for (const auto& [h, ch] : b.terms_) out.add_term(g * h, cg * ch);
    return out;
}

WreathAlgebraElement WreathAlgebraElement::scaled(const BigRational& factor) const {
    WreathAlgebraElement out(ambient_);
    if (factor == BigRational(0)) return out;
    for (const auto& [g, c] : terms_) out.terms_.emplace(g, c * factor);
    return out;
}

std::string WreathAlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.to_string() + "*" + g.to_string();
    }
    return out;
}

WreathAlgebraElement tie_idempotent(int n, int r) {
    if (r < 1 || r >= n)
        throw IndexOutOfRange("tie index " + std::to_string(r) + " outside 1.." +
                              std::to_string(n - 1));
    WreathAlgebraElement out = WreathAlgebraElement::one(n).scaled(BigRational(1, 2));
    out.add_term(SignedPermutation::flip(n, r) * SignedPermutation::flip(n, r + 1),
                 BigRational(1, 2));
    return out;
}

WreathAlgebraElement specialization_image(const Element& a, int n) {
    if (a.ambient() != n) throw AmbientMismatch("element ambient does not match n");
    WreathAlgebraElement out(n);
    for (const auto& [word, coeff] : a.terms()) {
        WreathAlgebraElement image = WreathAlgebraElement::one(n);
        for (std::size_t i = 0; i < word.size(); ++i) {
            const Generator letter = word.letter(i);
            if (letter.kind == GeneratorKind::Tie) {
                image = image * tie_idempotent(n, letter.index);
            } else {
                // Crossing and inverse crossing coincide at u = 1.
                image = image * WreathAlgebraElement::single(
                                    SignedPermutation::crossing(n, letter.index));
            }
        }
        out += image.scaled(coeff.eval_at(BigRational(1)));
    }
    return out;
}

std::map<Permutation, BigRational> sym_specialization_image(const Element& a, int n,
                                                            bool ties_to_identity) {
    if (a.ambient() != n) throw AmbientMismatch("element ambient does not match n");
    std::map<Permutation, BigRational> out;
    for (const auto& [word, coeff] : a.terms()) {
        bool killed = false;
        Permutation image = Permutation::identity(n);
        for (std::size_t i = 0; i < word.size(); ++i) {
            const Generator letter = word.letter(i);
            if (letter.kind == GeneratorKind::Tie) {
                if (!ties_to_identity) {
                    killed = true;
                    break;
                }
            } else {
                image = image * Permutation::transposition(n, letter.index);
            }
        }
        if (killed) continue;
        const BigRational value = coeff.eval_at(BigRational(1));
        if (value == BigRational(0)) continue;
        auto [it, inserted] = out.emplace(image, value);
        if (!inserted) {
            it->second += value;
            if (it->second == BigRational(0)) out.erase(it);
        }
    }
    return out;
}

}  // namespace tiealg
