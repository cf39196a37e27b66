#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qloop {

enum class DynkinFamily { A, D, E };

// Simply-laced Cartan data with a fixed bipartition I = I0 u I1.
//
// Node labels are 1-based. A_n is the path 1-2-...-n. D_n has leaves 1 and 2
// attached to node 3 and the chain 3-4-...-n (so D4 has central node 3).
// E_n uses Bourbaki labels (1-3-4-5-6-7-8 with 2 attached to 4).
// xi(i) = 0 on I0 and 1 on I1; node 1 lies in I0 for types A and E, node 3
// for type D.
class CartanData {
 public:
  // Parses "A3", "D4", "E6", ...; throws InvalidInput on anything else.
  static CartanData from_label(std::string_view label);
  static CartanData make(DynkinFamily family, int n);

  const std::string& label() const { return label_; }
  DynkinFamily family() const { return family_; }
  int rank() const { return n_; }
  int entry(int i, int j) const { return cartan_[i - 1][j - 1]; }
  bool adjacent(int i, int j) const { return i != j && entry(i, j) == -1; }
  const std::vector<int>& neighbors(int i) const { return neighbors_[i - 1]; }
  int xi(int i) const { return xi_[i - 1]; }
  bool in_i0(int i) const { return xi(i) == 0; }
  std::vector<int> i0() const;
  std::vector<int> i1() const;
  int coxeter_number() const;
  void check_node(int i) const;

  bool operator==(const CartanData& o) const { return label_ == o.label_; }

 private:
  CartanData(DynkinFamily family, int n, std::vector<std::pair<int, int>> edges, int colour_root);

  std::string label_;
  DynkinFamily family_;
  int n_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> xi_;
};

}  // namespace qloop
