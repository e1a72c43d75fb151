#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unicov {

using Elt = uint16_t;
inline constexpr int kMaxOrder = 768;

// membership mask for element sets, groups are capped at 768 elements
struct EltSet {
  std::array<uint64_t, kMaxOrder / 64> w{};

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool operator==(const EltSet&) const = default;
  bool contains(const EltSet& other) const {
    for (size_t k = 0; k < w.size(); ++k)
      if (other.w[k] & ~w[k]) return false;
    return true;
  }
  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t x : w) { h ^= x; h *= 1099511628211ull; }
    return h;
  }
};

// Finite group as a Cayley table over indices 0..n-1, identity at 0.
// Construction validates the Latin-square property and associativity
// (exhaustively for n <= 256, on pseudo-random triples above).
class FiniteGroup {
 public:
  FiniteGroup(std::vector<Elt> table, int n, std::string name);

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

  Elt mul(Elt a, Elt b) const { return table_[size_t(a) * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt conj(Elt a, Elt x) const { return mul(mul(inv(x), a), x); }  // a^x
  Elt comm(Elt a, Elt b) const { return mul(inv(mul(b, a)), mul(a, b)); }  // [a,b]
  Elt pow(Elt a, long k) const;
  int elt_order(Elt a) const;
  long exponent() const;
  bool is_abelian() const;

  const std::vector<Elt>& table() const { return table_; }
  uint64_t content_hash() const;

 private:
  int n_;
  std::vector<Elt> table_;
  std::vector<Elt> inv_;
  std::string name_;
};

struct Subgroup {
  const FiniteGroup* g = nullptr;
  std::vector<Elt> members;  // sorted ascending, always contains 0
  EltSet mask;

  int order() const { return int(members.size()); }
  bool contains(Elt x) const { return mask.test(x); }
  bool operator==(const Subgroup& o) const { return mask == o.mask; }
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Elt>& gens);
Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<Elt> members);
bool is_subgroup(const FiniteGroup& g, const std::vector<Elt>& members);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
bool is_central(const FiniteGroup& g, const Subgroup& s);

Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elt>& seeds);
Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup derived_subgroup_of(const FiniteGroup& g, const Subgroup& s);
Subgroup center(const FiniteGroup& g);
std::vector<Subgroup> derived_series(const FiniteGroup& g);
std::optional<int> derived_length(const FiniteGroup& g);
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
std::optional<int> nilpotency_class(const FiniteGroup& g);

// order = p^k for prime p; nullopt when the order is not a prime power
std::optional<long> p_group_prime(const FiniteGroup& g);
Subgroup agemo(const FiniteGroup& g, int i);  // p-groups only
bool is_powerful(const FiniteGroup& g);       // refuses p = 2
bool is_regular(const FiniteGroup& g);        // p-groups only

std::vector<long> abelian_invariants(const FiniteGroup& g);  // abelian only
// true when the two largest invariant factors coincide (C_e x C_e at exponent)
bool has_square_at_exponent(const std::vector<long>& invariants);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<Elt> proj;     // G -> Q
  std::vector<Elt> section;  // Q -> G, canonical coset representatives
};
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n);

struct SubgroupGroup {
  FiniteGroup group;
  std::vector<Elt> embed;  // local index -> parent index
};
SubgroupGroup subgroup_as_group(const Subgroup& s);

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);
Subgroup sylow(const FiniteGroup& g, long p);
std::vector<Subgroup> two_generator_subgroups(const FiniteGroup& g);
std::vector<Elt> generating_set(const FiniteGroup& g);

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);  // order <= 128
// some surjective homomorphism from -> onto exists; exhaustive over
// generator images, work capped
bool surjective_hom_exists(const FiniteGroup& from, const FiniteGroup& onto);

// constructors
FiniteGroup cyclic(long n);
FiniteGroup abelian(const std::vector<long>& invariants);
FiniteGroup dihedral(long n);  // order 2n
FiniteGroup quaternion8();
enum class ExtraspecialType { ExponentP, ExponentPSquared };
FiniteGroup extraspecial(long p, ExtraspecialType type);  // order p^3
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// kernel element i maps to index i*|H|, complement element j to index j
FiniteGroup semidirect(const FiniteGroup& n, const FiniteGroup& h,
                       const std::vector<std::pair<Elt, std::vector<Elt>>>& gen_action,
                       std::string name = "");
FiniteGroup semidirect_full(const FiniteGroup& n, const FiniteGroup& h,
                            const std::vector<std::vector<Elt>>& action,
                            std::string name = "");
FiniteGroup example_G(long p);       // C_{p^2} x| C_{p^2}, order p^4
FiniteGroup example_Gamma1(long p);  // C_{p^3} x| C_{p^2}, order p^5
FiniteGroup example_Gamma2(long p);  // (C_{p^2})^2 x| C_{p^2}, order p^6
// class-2 cover of an abelian p-group with the given invariant factors
FiniteGroup abelian_cover(const std::vector<long>& invariants);
FiniteGroup burnside23();  // free exponent-3 group on 2 generators, order 27

long lcm_long(long a, long b);
std::vector<std::pair<long, int>> factorize(long n);

}  // namespace unicov
