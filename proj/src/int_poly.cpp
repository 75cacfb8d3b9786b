#include "cohomdet/int_poly.hpp"

#include <algorithm>
#include <cctype>

#include "cohomdet/errors.hpp"
#include "cohomdet/int_matrix.hpp"

namespace cohomdet {

namespace {

constexpr int shift_of(int var) { return (IntPoly::max_vars - 1 - var) * 8; }

int exponent_of(std::uint64_t key, int var) {
    return static_cast<int>((key >> shift_of(var)) & 0xffu);
}

// Descending graded-lex: higher degree first, then larger exponent of a1, ...
bool precedes(int deg_x, std::uint64_t key_x, int deg_y, std::uint64_t key_y) {
    return deg_x != deg_y ? deg_x > deg_y : key_x > key_y;
}

bool divides(std::uint64_t divisor, std::uint64_t dividend, int num_vars) {
    for (int v = 0; v < num_vars; ++v) {
        if (exponent_of(divisor, v) > exponent_of(dividend, v)) return false;
    }
    return true;
}

}  // namespace

IntPoly::IntPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0 || num_vars > max_vars) {
        throw DimensionError("polynomial ring must have between 0 and " +
                             std::to_string(max_vars) + " variables, got " +
                             std::to_string(num_vars));
    }
}

IntPoly IntPoly::constant(int num_vars, const mpz_class& c) {
    IntPoly p(num_vars);
    if (c != 0) p.terms_.push_back(Term{0, 0, c});
    return p;
}

IntPoly IntPoly::variable(int num_vars, int index) {
    IntPoly p(num_vars);
    if (index < 0 || index >= num_vars) {
        throw DimensionError("variable index " + std::to_string(index + 1) + " outside a1..a" +
                             std::to_string(num_vars));
    }
    p.terms_.push_back(Term{std::uint64_t{1} << shift_of(index), 1, mpz_class(1)});
    return p;
}

IntPoly IntPoly::from_terms(int num_vars,
                            const std::vector<std::pair<std::vector<int>, mpz_class>>& terms) {
    IntPoly out(num_vars);
    out.terms_.reserve(terms.size());
    for (const auto& [exps, coef] : terms) {
        if (static_cast<int>(exps.size()) != num_vars) {
            throw DimensionError("exponent vector length " + std::to_string(exps.size()) +
                                 " does not match " + std::to_string(num_vars) + " variables");
        }
        std::uint64_t key = 0;
        int deg = 0;
        for (int v = 0; v < num_vars; ++v) {
            if (exps[v] < 0) throw ArgumentError("negative exponent");
            deg += exps[v];
            if (deg > max_degree) throw DimensionError("total degree exceeds 255");
            key |= static_cast<std::uint64_t>(exps[v]) << shift_of(v);
        }
        if (coef != 0) out.terms_.push_back(Term{key, deg, coef});
    }
    out.normalize();
    return out;
}

void IntPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
        return precedes(x.degree, x.key, y.degree, y.key);
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().key == t.key) {
            merged.back().coef += t.coef;
        } else {
            if (!merged.empty() && merged.back().coef == 0) merged.pop_back();
            merged.push_back(std::move(t));
        }
    }
    if (!merged.empty() && merged.back().coef == 0) merged.pop_back();
    terms_ = std::move(merged);
}

IntPoly IntPoly::linear(std::span<const mpz_class> coeffs) {
    IntPoly p(static_cast<int>(coeffs.size()));
    for (int v = 0; v < p.num_vars_; ++v) {
        if (coeffs[v] != 0) p.terms_.push_back(Term{std::uint64_t{1} << shift_of(v), 1, coeffs[v]});
    }
    // a1 carries the largest key, so the terms are already in descending order
    return p;
}

std::vector<int> IntPoly::exponents(std::uint64_t key) const {
    std::vector<int> e(static_cast<std::size_t>(num_vars_));
    for (int v = 0; v < num_vars_; ++v) e[v] = exponent_of(key, v);
    return e;
}

mpz_class IntPoly::coefficient(std::span<const int> exps) const {
    if (static_cast<int>(exps.size()) != num_vars_) {
        throw DimensionError("exponent vector length does not match variable count");
    }
    std::uint64_t key = 0;
    for (int v = 0; v < num_vars_; ++v) {
        if (exps[v] < 0 || exps[v] > max_degree) return 0;
        key |= static_cast<std::uint64_t>(exps[v]) << shift_of(v);
    }
    for (const auto& t : terms_)
        if (t.key == key) return t.coef;
    return 0;
}

HomogeneousDegree IntPoly::homogeneous_degree() const {
    if (terms_.empty()) return {HomogeneousDegree::Kind::any, 0};
    const int d = terms_.front().degree;
    for (const auto& t : terms_) {
        if (t.degree != d) return {HomogeneousDegree::Kind::inhomogeneous, 0};
    }
    return {HomogeneousDegree::Kind::exact, d};
}

int IntPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().degree; }

void IntPoly::check_compatible(const IntPoly& other) const {
    if (num_vars_ != other.num_vars_) {
        throw DimensionError("polynomials live in rings with " + std::to_string(num_vars_) +
                             " and " + std::to_string(other.num_vars_) + " variables");
    }
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& t : out.terms_) t.coef = -t.coef;
    return out;
}

void IntPoly::add_scaled(const IntPoly& other, bool negate) {
    check_compatible(other);
    if (other.terms_.empty()) return;
    if (&other == this) {
        const IntPoly copy = other;
        add_scaled(copy, negate);
        return;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto x = terms_.begin();
    auto y = other.terms_.begin();
    while (x != terms_.end() || y != other.terms_.end()) {
        if (y == other.terms_.end() ||
            (x != terms_.end() && precedes(x->degree, x->key, y->degree, y->key))) {
            merged.push_back(std::move(*x++));
        } else if (x == terms_.end() || precedes(y->degree, y->key, x->degree, x->key)) {
            merged.push_back(Term{y->key, y->degree, negate ? mpz_class(-y->coef) : y->coef});
            ++y;
        } else {
            if (negate)
                x->coef -= y->coef;
            else
                x->coef += y->coef;
            if (x->coef != 0) merged.push_back(std::move(*x));
            ++x;
            ++y;
        }
    }
    terms_ = std::move(merged);
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    add_scaled(other, false);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
    add_scaled(other, true);
    return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.coef *= c;
    }
    return *this;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    p.check_compatible(q);
    if (q.terms_.size() == 1 || p.terms_.size() == 1) {
        IntPoly out(p.num_vars_);
        if (p.terms_.empty() || q.terms_.empty()) return out;
        if (p.total_degree() + q.total_degree() > IntPoly::max_degree) {
            throw DimensionError("product exceeds total degree 255");
        }
        // multiplying by a monomial preserves the order
        const IntPoly& mono = q.terms_.size() == 1 ? q : p;
        const IntPoly& other = q.terms_.size() == 1 ? p : q;
        const auto& m = mono.terms_.front();
        out.terms_.reserve(other.terms_.size());
        for (const auto& t : other.terms_)
            out.terms_.push_back(IntPoly::Term{t.key + m.key, t.degree + m.degree, t.coef * m.coef});
        return out;
    }
    const ProductTerm part{&p, &q, false};
    return sum_of_products(p.num_vars_, std::span<const ProductTerm>(&part, 1));
}

IntPoly sum_of_products(int num_vars, std::span<const ProductTerm> parts) {
    IntPoly out(num_vars);
    struct Pair {
        std::uint64_t key;
        int degree;
        std::uint32_t part, i, j;
    };
    std::size_t total = 0;
    for (const auto& part : parts) {
        if (part.lhs->num_vars() != num_vars || part.rhs->num_vars() != num_vars) {
            throw DimensionError("sum_of_products: operands disagree on variable count");
        }
        if (part.lhs->is_zero() || part.rhs->is_zero()) continue;
        if (part.lhs->total_degree() + part.rhs->total_degree() > IntPoly::max_degree) {
            throw DimensionError("product exceeds total degree 255");
        }
        total += part.lhs->term_count() * part.rhs->term_count();
    }
    if (total == 0) return out;

    std::vector<Pair> pairs;
    pairs.reserve(total);
    for (std::uint32_t k = 0; k < parts.size(); ++k) {
        const auto& x = parts[k].lhs->terms();
        const auto& y = parts[k].rhs->terms();
        for (std::uint32_t i = 0; i < x.size(); ++i)
            for (std::uint32_t j = 0; j < y.size(); ++j)
                pairs.push_back(Pair{x[i].key + y[j].key, x[i].degree + y[j].degree, k, i, j});
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        return precedes(x.degree, x.key, y.degree, y.key);
    });

    mpz_class acc;
    for (std::size_t s = 0; s < pairs.size();) {
        acc = 0;
        std::size_t e = s;
        while (e < pairs.size() && pairs[e].key == pairs[s].key) {
            const auto& part = parts[pairs[e].part];
            mpz_srcptr c1 = part.lhs->terms()[pairs[e].i].coef.get_mpz_t();
            mpz_srcptr c2 = part.rhs->terms()[pairs[e].j].coef.get_mpz_t();
            if (part.negate)
                mpz_submul(acc.get_mpz_t(), c1, c2);
            else
                mpz_addmul(acc.get_mpz_t(), c1, c2);
            ++e;
        }
        if (acc != 0) out.terms_.push_back(IntPoly::Term{pairs[s].key, pairs[s].degree, acc});
        s = e;
    }
    return out;
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly IntPoly::pow(unsigned exponent) const {
    IntPoly result = constant(num_vars_, 1);
    IntPoly base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

IntPoly exact_divide(const IntPoly& p, const IntPoly& q) {
    p.check_compatible(q);
    if (q.is_zero()) throw ArgumentError("division by the zero polynomial");
    IntPoly quotient(p.num_vars_);
    if (p.is_zero()) return quotient;

    const auto& lead = q.terms_.front();
    auto fail = [&]() -> IntPoly {
        throw NotDivisibleError("'" + p.to_string() + "' is not divisible by '" + q.to_string() + "'");
    };

    if (q.terms_.size() == 1) {
        quotient.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_) {
            if (!divides(lead.key, t.key, p.num_vars_) ||
                !mpz_divisible_p(t.coef.get_mpz_t(), lead.coef.get_mpz_t()))
                return fail();
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), t.coef.get_mpz_t(), lead.coef.get_mpz_t());
            quotient.terms_.push_back(IntPoly::Term{t.key - lead.key, t.degree - lead.degree, c});
        }
        return quotient;
    }

    // Leading-term reduction; exact division means every step must succeed.
    IntPoly remainder = p;
    while (!remainder.is_zero()) {
        const auto& r = remainder.terms_.front();
        if (!divides(lead.key, r.key, p.num_vars_) ||
            !mpz_divisible_p(r.coef.get_mpz_t(), lead.coef.get_mpz_t()))
            return fail();
        IntPoly::Term t{r.key - lead.key, r.degree - lead.degree, mpz_class()};
        mpz_divexact(t.coef.get_mpz_t(), r.coef.get_mpz_t(), lead.coef.get_mpz_t());
        IntPoly shifted(p.num_vars_);
        shifted.terms_.reserve(q.terms_.size());
        for (const auto& s : q.terms_)
            shifted.terms_.push_back(IntPoly::Term{s.key + t.key, s.degree + t.degree, s.coef * t.coef});
        remainder -= shifted;
        quotient.terms_.push_back(std::move(t));
    }
    return quotient;
}

IntPoly substitute_linear(const IntPoly& p, const IntMatrix& c) {
    if (c.rows() != p.num_vars()) {
        throw DimensionError("substitution matrix has " + std::to_string(c.rows()) +
                             " rows for a polynomial in " + std::to_string(p.num_vars()) +
                             " variables");
    }
    const int target = c.cols();
    std::vector<IntPoly> images;
    images.reserve(static_cast<std::size_t>(p.num_vars()));
    for (int v = 0; v < p.num_vars(); ++v) {
        std::vector<mpz_class> row(static_cast<std::size_t>(target));
        for (int j = 0; j < target; ++j) row[j] = c(v, j);
        images.push_back(IntPoly::linear(row));
    }
    // powers[v][e] = images[v]^e, filled lazily
    std::vector<std::vector<IntPoly>> powers(images.size());
    auto power = [&](int v, int e) -> const IntPoly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(IntPoly::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };

    IntPoly out(target);
    for (const auto& t : p.terms()) {
        IntPoly term = IntPoly::constant(target, t.coef);
        for (int v = 0; v < p.num_vars() && !term.is_zero(); ++v) {
            const int e = exponent_of(t.key, v);
            if (e) term = term * power(v, e);
        }
        out += term;
    }
    return out;
}

std::string IntPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coef < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const mpz_class magnitude = abs(t.coef);
        std::string mono;
        for (int v = 0; v < num_vars_; ++v) {
            const int e = exponent_of(t.key, v);
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += 'a' + std::to_string(v + 1);
            if (e > 1) mono += '^' + std::to_string(e);
        }
        if (mono.empty()) {
            out += magnitude.get_str();
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += magnitude.get_str() + '*' + mono;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int num_vars) : text_(text), num_vars_(num_vars) {}

    IntPoly parse() {
        IntPoly result(num_vars_);
        skip_space();
        if (at_end()) error("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_space();
            } else if (!first) {
                error("expected '+' or '-'");
            }
            first = false;
            result += parse_term(sign);
            skip_space();
        }
        return result;
    }

private:
    IntPoly parse_term(int sign) {
        mpz_class coef = sign;
        std::vector<int> exps(static_cast<std::size_t>(num_vars_), 0);
        for (;;) {
            skip_space();
            if (at_end()) error("expected a factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coef *= mpz_class(read_digits());
            } else if (peek() == 'a') {
                get();
                const std::string idx = read_digits();
                const long v = std::stol(idx);
                if (v < 1 || v > num_vars_) {
                    error("variable a" + idx + " outside a1..a" + std::to_string(num_vars_));
                }
                int e = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    get();
                    skip_space();
                    const std::string es = read_digits();
                    if (es.size() > 3) error("exponent too large");
                    e = std::stoi(es);
                }
                exps[static_cast<std::size_t>(v - 1)] += e;
            } else {
                error(std::string("unexpected character '") + peek() + "'");
            }
            skip_space();
            if (!at_end() && peek() == '*') {
                get();
                continue;
            }
            break;
        }
        return IntPoly::from_terms(num_vars_, {{exps, coef}});
    }

    std::string read_digits() {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) error("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void error(const std::string& what) const {
        throw ParseError("polynomial text '" + std::string(text_) + "' at offset " +
                         std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    int num_vars_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text, int num_vars) {
    return PolyParser(text, num_vars).parse();
}

}  // namespace cohomdet
