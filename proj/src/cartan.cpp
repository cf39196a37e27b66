#include "qloop/cartan.hpp"

#include <charconv>
#include <deque>

#include "qloop/error.hpp"

namespace qloop {

CartanData CartanData::from_label(std::string_view label) {
  if (label.size() < 2) throw InvalidInput("unknown Dynkin type '" + std::string(label) + "'");
  DynkinFamily fam;
  switch (label[0]) {
    case 'A':
    case 'a':
      fam = DynkinFamily::A;
      break;
    case 'D':
    case 'd':
      fam = DynkinFamily::D;
      break;
    case 'E':
    case 'e':
      fam = DynkinFamily::E;
      break;
    default:
      throw InvalidInput("unknown Dynkin type '" + std::string(label) + "'");
  }
  int n = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), n);
  if (ec != std::errc{} || ptr != label.data() + label.size())
    throw InvalidInput("unknown Dynkin type '" + std::string(label) + "'");
  return make(fam, n);
}

CartanData CartanData::make(DynkinFamily family, int n) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case DynkinFamily::A:
      if (n < 1) throw InvalidInput("A_n needs n >= 1");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      return CartanData(family, n, edges, 1);
    case DynkinFamily::D:
      if (n < 4) throw InvalidInput("D_n needs n >= 4");
      edges = {{1, 3}, {2, 3}};
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      return CartanData(family, n, edges, 3);
    case DynkinFamily::E:
      if (n < 6 || n > 8) throw InvalidInput("E_n needs 6 <= n <= 8");
      edges = {{1, 3}, {3, 4}, {2, 4}};
      for (int i = 4; i < n; ++i) edges.emplace_back(i, i + 1);
      return CartanData(family, n, edges, 1);
  }
  throw InvalidInput("unknown Dynkin family");
}

CartanData::CartanData(DynkinFamily family, int n, std::vector<std::pair<int, int>> edges, int colour_root)
    : family_(family), n_(n), cartan_(n, std::vector<int>(n, 0)), neighbors_(n), xi_(n, -1) {
  const char letter = family == DynkinFamily::A ? 'A' : family == DynkinFamily::D ? 'D' : 'E';
  label_ = std::string(1, letter) + std::to_string(n);
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  for (auto [a, b] : edges) {
    cartan_[a - 1][b - 1] = cartan_[b - 1][a - 1] = -1;
    neighbors_[a - 1].push_back(b);
    neighbors_[b - 1].push_back(a);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  // 2-colour the tree.
  std::deque<int> queue{colour_root};
  xi_[colour_root - 1] = 0;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j : neighbors_[i - 1])
      if (xi_[j - 1] < 0) {
        xi_[j - 1] = 1 - xi_[i - 1];
        queue.push_back(j);
      }
  }
}

std::vector<int> CartanData::i0() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (xi(i) == 0) out.push_back(i);
  return out;
}

std::vector<int> CartanData::i1() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (xi(i) == 1) out.push_back(i);
  return out;
}

int CartanData::coxeter_number() const {
  switch (family_) {
    case DynkinFamily::A:
      return n_ + 1;
    case DynkinFamily::D:
      return 2 * n_ - 2;
    case DynkinFamily::E:
      return n_ == 6 ? 12 : n_ == 7 ? 18 : 30;
  }
  return 0;
}

void CartanData::check_node(int i) const {
  if (i < 1 || i > n_)
    throw InvalidInput("node " + std::to_string(i) + " out of range for " + label_);
}

}  // namespace qloop
