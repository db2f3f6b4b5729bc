#ifndef SP62V_SYMPLECTIC_HPP
#define SP62V_SYMPLECTIC_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "sp62v/bsgs.hpp"
#include "sp62v/census.hpp"
#include "sp62v/perm.hpp"

namespace sp62v {

// 6x6 matrix over F2; bit c of rows[r] is the (r, c) entry. Vectors are
// 6-bit values with bits 0..2 the e-basis half and bits 3..5 the f-basis
// half of a symplectic basis (e_i pairs with f_i).
struct BinMatrix {
  std::array<uint8_t, 6> rows{};

  static BinMatrix identity();
  uint8_t apply(uint8_t v) const;
  // Composition: (a * b).apply(v) = a.apply(b.apply(v)).
  BinMatrix operator*(const BinMatrix& o) const;
  BinMatrix transpose() const;
  BinMatrix inverse() const;  // errors on a singular matrix
  bool operator==(const BinMatrix& o) const { return rows == o.rows; }
};

// Standard symplectic pairing for the block-antidiagonal Gram matrix.
uint8_t symplectic_pairing(uint8_t u, uint8_t v);
bool is_symplectic(const BinMatrix& m);

// v -> v + B(v, w) w; symplectic involution for w != 0.
BinMatrix transvection(uint8_t w);

// Quadratic forms are 64-bit truth tables: bit x holds Q(x).
uint8_t form_eval(uint64_t table, uint8_t x);
// All 64 forms polarizing to the symplectic pairing, indexed by their linear
// label c (form = base form + <c, .>); validated exhaustively over all 64x64
// vector pairs.
std::vector<uint64_t> polarizing_forms();
int arf_invariant(uint64_t table);
// Arf computed over an arbitrary symplectic basis (pairs (e, f)); used to
// check basis independence.
int arf_with_basis(uint64_t table, const std::array<std::pair<uint8_t, uint8_t>, 3>& basis);

// Permutation of the 63 nonzero vectors under v -> M v, vectors ordered by
// their 6-bit value. Errors on a non-symplectic matrix.
Perm action_on_points(const BinMatrix& m);

// Permutation of the 36 Arf-0 polarizing forms under Q -> Q o M^-1, forms
// ordered by linear label. Errors on a non-symplectic matrix.
Perm action_on_forms(const BinMatrix& m, const std::vector<uint64_t>& arf0_forms);

// The concrete Sp6(2) model: pruned transvection generators with verified
// order, both permutation actions, and the form tables.
struct Sp62Model {
  std::vector<BinMatrix> generators;
  std::vector<Perm> gens63;
  StabilizerChain chain63;
  std::vector<uint64_t> all_forms;   // the 64 polarizing forms by label
  std::vector<uint64_t> arf0_forms;  // the 36 Arf-invariant-0 forms by label
  std::vector<Perm> gens36;
  StabilizerChain chain36;
};

Sp62Model build_sp62_model();

constexpr uint64_t kSp62Order = 1451520;  // 2^9 * (2^2-1)(2^4-1)(2^6-1)

struct ClassVectorHandles {
  size_t c1, c2, c3;  // census indices for types 3^12, 1^12.2^12, 1^6.2.4^7
};

// Errors with a "class vector mismatch" diagnostic if any of the three types
// is missing or ambiguous in the census.
ClassVectorHandles locate_class_vector(const GroupCensus& census);

}  // namespace sp62v

#endif
