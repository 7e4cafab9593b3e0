#pragma once

#include <map>
#include <string>
#include <vector>

namespace birack {

// Exponent vector for a monomial: slot 0 is the exponent of u, slots
// 1..q_count are the exponents of q_1..q_c. Term order is graded
// (total degree first), then lexicographically descending, which matches
// the printed form of the writhe-enhanced polynomials
// (constant, q_1, q_2, q_1 q_2, ...).
struct TermOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse polynomial with nonnegative integer exponents and positive
// integer coefficients, in u and/or q_1..q_c. Zero coefficients are never
// stored.
class InvariantPolynomial {
public:
    InvariantPolynomial() : InvariantPolynomial(0) {}
    explicit InvariantPolynomial(int q_count);

    int q_count() const { return q_count_; }
    bool is_zero() const { return terms_.empty(); }

    // exps: full exponent vector of size 1 + q_count.
    void add(const std::vector<int>& exps, long long coeff);
    void add_u_term(int u_exp, long long coeff);
    void add_q_term(const std::vector<int>& q_exps, long long coeff);

    long long coeff(const std::vector<int>& exps) const;
    const std::map<std::vector<int>, long long, TermOrder>& terms() const { return terms_; }

    // Sum of all coefficients (= value with every variable set to 1).
    long long coefficient_sum() const;
    // Sum of coeff * u-exponent over all terms.
    long long u_weighted_sum() const;

    // Substitute 1 for the named variables ("u", "q_1", ...). Unknown
    // names are rejected.
    InvariantPolynomial specialize(const std::vector<std::string>& vars_to_one) const;
    bool is_constant() const;
    long long constant_value() const;  // 0 for the zero polynomial

    // Text form: terms joined by '+'; coefficient 1 omitted except on the
    // constant term; exponent 1 written without '^'; e.g. "4u+4u^2+u^4",
    // "16+8q_1+8q_2+4q_1q_2".
    std::string to_text() const;
    // {"terms":[{"exp":{"u":4},"coeff":1},...]} in canonical term order.
    std::string to_json() const;

    bool operator==(const InvariantPolynomial& other) const {
        return q_count_ == other.q_count_ && terms_ == other.terms_;
    }

    static InvariantPolynomial constant(long long value);
    // Parse the text form back (used for golden tests and CLI round trips).
    static InvariantPolynomial from_text(const std::string& text, int q_count = 0);

private:
    int q_count_;
    std::map<std::vector<int>, long long, TermOrder> terms_;
};

// Canonical sorted multiset of nonnegative integers.
class InvariantMultiset {
public:
    InvariantMultiset() = default;
    explicit InvariantMultiset(std::vector<long long> values);

    const std::vector<long long>& values() const { return values_; }
    long long total() const;
    std::size_t size() const { return values_.size(); }

    std::string to_text() const;  // "{1, 2, 2, 4}"
    std::string to_json() const;  // "[1,2,2,4]"

    bool operator==(const InvariantMultiset&) const = default;

private:
    std::vector<long long> values_;
};

}  // namespace birack
