#ifndef ENRIQ_DIVISOR_HPP
#define ENRIQ_DIVISOR_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

// Exact arithmetic in Num(Y) for an unnodal Enriques surface Y, presented
// with generators E1..E10 (E_i.E_j = 1 - delta_ij) and the degree-10
// polarization Delta = (E1+...+E10)/3.  Coefficients a_i live in (1/3)Z
// with a_i - a_j integral; we store t_i = 3*a_i so everything is an
// integer and the membership test is a single congruence mod 3.

namespace enriq {

// Domain error with a stable machine-readable code ("invalid-class",
// "parse-error", "not-definite", ...).  The CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
  throw Error(code, msg);
}

struct DivisorClass {
  // t[i] = 3 * (coefficient of E_{i+1})
  std::array<std::int64_t, 10> t{};

  static DivisorClass zero() { return DivisorClass{}; }
  static DivisorClass e(int i);       // E_i, i in 1..10
  static DivisorClass fano_delta();   // t = (1,...,1)

  bool is_zero() const;
  // all t_i share a residue mod 3 (equivalent to a_i in (1/3)Z, a_i - a_j in Z)
  bool is_valid() const;
  void ensure_valid(const char* who) const;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;

  bool operator==(const DivisorClass&) const = default;
  auto operator<=>(const DivisorClass&) const = default;  // lex on t

  // exact halving; throws "not-divisible" when some t_i is odd
  DivisorClass half() const;
  bool divisible_by_two() const;
};

DivisorClass operator*(std::int64_t c, const DivisorClass& x);

// Intersection number x.y = (S_x S_y - sum_i t_i t'_i) / 9.
// Throws "invalid-class" if either operand fails the congruence test and
// "internal" if the division is inexact (cannot happen for valid classes).
std::int64_t pairing(const DivisorClass& x, const DivisorClass& y);
inline std::int64_t self_pairing(const DivisorClass& x) { return pairing(x, x); }

// {E1,...,E9, Delta}: a Z-basis of the full lattice (det -1, signature (1,9)).
std::array<DivisorClass, 10> basis_of_lambda();

// Coordinates of x in basis_of_lambda(); exact for every valid class.
std::array<std::int64_t, 10> lambda_coordinates(const DivisorClass& x);

// Representative of the S10-orbit of x under coordinate permutations:
// coordinates sorted in non-increasing order.  Idempotent.
DivisorClass canonical_orbit_form(const DivisorClass& x);

// Grammar (ASCII, whitespace insignificant):
//   expr := term (('+'|'-') term)*
//   term := [coef ['*']] atom | coef
//   atom := 'E' int(1..10) | 'Delta'
//   coef := int | int '/3'
// A bare coefficient term must be the literal 0 (the zero class).
DivisorClass parse_divisor(std::string_view text);
std::string format_divisor(const DivisorClass& x);

}  // namespace enriq

#endif  // ENRIQ_DIVISOR_HPP
