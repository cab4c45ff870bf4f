#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace linepush {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

// Bijection on places 0..n-1: the token at place p moves to place image(p).
// Products compose left to right: (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t n) : images_(n) { std::iota(images_.begin(), images_.end(), 0); }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> hit(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation");
      hit[static_cast<std::size_t>(v)] = 1;
    }
  }

  // Cycles over 0-based places, e.g. {{0,1,2}} maps 0->1->2->0.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(n, 0);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const int from = cyc[i];
        if (from < 0 || static_cast<std::size_t>(from) >= n || used[static_cast<std::size_t>(from)])
          throw std::invalid_argument("cycles are not disjoint or out of range");
        used[static_cast<std::size_t>(from)] = 1;
        img[static_cast<std::size_t>(from)] = cyc[(i + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(img));
  }

  std::size_t size() const noexcept { return images_.size(); }
  int operator()(int p) const { return images_[static_cast<std::size_t>(p)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation operator*(const Permutation& next) const {
    if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out[i] = next.images_[static_cast<std::size_t>(images_[i])];
    Permutation r;
    r.images_ = std::move(out);
    return r;
  }

  Permutation inverse() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    Permutation r;
    r.images_ = std::move(out);
    return r;
  }

  Permutation pow(long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Permutation acc(size());
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  bool fixes(int p) const { return (*this)(p) == p; }

  // Non-trivial cycles, each starting at its smallest place, ordered by it.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == static_cast<int>(s)) continue;
      std::vector<int> cyc;
      for (int p = static_cast<int>(s); !seen[static_cast<std::size_t>(p)]; p = images_[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = 1;
        cyc.push_back(p);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  Parity parity() const {
    std::size_t transpositions = 0;
    for (const auto& c : cycles()) transpositions += c.size() - 1;
    return transpositions % 2 ? Parity::odd : Parity::even;
  }

  std::uint64_t order() const {
    std::uint64_t l = 1;
    for (const auto& c : cycles()) l = std::lcm(l, static_cast<std::uint64_t>(c.size()));
    return l;
  }

  // Cycle notation over 1-based places, "()" for the identity.
  std::string to_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += "(";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(c[i] + 1);
      }
      s += ")";
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

inline Parity parity(const Permutation& p) { return p.parity(); }
inline std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) { return p.cycles(); }

}  // namespace linepush

template <>
struct std::hash<linepush::Permutation> {
  std::size_t operator()(const linepush::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
