#include "transword/freegroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "transword/error.hpp"

namespace transword {

FreeWord reduce_free(const FreeWord& w) {
  FreeWord stack;
  stack.reserve(w.size());
  for (const auto& l : w) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

bool is_freely_reduced(const FreeWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1].is_inverse_of(w[i])) return false;
  }
  return true;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

FreeWord concat(const FreeWord& lhs, const FreeWord& rhs) {
  FreeWord out = lhs;
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

FreeWord multiply(const FreeWord& lhs, const FreeWord& rhs) { return reduce_free(concat(lhs, rhs)); }

CyclicReduction cyclic_reduce(const FreeWord& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo].is_inverse_of(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return {FreeWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(lo)),
          FreeWord(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi))};
}

FreeWord AdjunctionSplit::recompose() const {
  FreeWord out = w0;
  for (const auto* part : {&w1, &w2}) out.insert(out.end(), part->begin(), part->end());
  const auto w1inv = inverse(w1);
  out.insert(out.end(), w1inv.begin(), w1inv.end());
  out.insert(out.end(), w3.begin(), w3.end());
  return out;
}

bool uses_only(const FreeWord& w, const GeneratorSet& gens) {
  return std::all_of(w.begin(), w.end(), [&](const Letter& l) { return gens.contains(l.generator()); });
}

AdjunctionSplit split_for_adjunction(const FreeWord& w, const GeneratorSet& y) {
  if (!is_freely_reduced(w)) throw DomainError("split_for_adjunction: word is not freely reduced");
  if (uses_only(w, y)) throw DomainError("split_for_adjunction: word uses only letters of the subset");

  auto in_y = [&](const Letter& l) { return y.contains(l.generator()); };
  const auto first_out = std::find_if_not(w.begin(), w.end(), in_y);
  const auto last_out = std::find_if_not(w.rbegin(), w.rend(), in_y).base();

  AdjunctionSplit split;
  split.w0.assign(w.begin(), first_out);
  split.w3.assign(last_out, w.end());
  const auto cyc = cyclic_reduce(FreeWord(first_out, last_out));
  split.w1 = cyc.conjugator;
  split.w2 = cyc.core;
  return split;
}

std::vector<FreeWord> enumerate_reduced(const GeneratorSet& gens, std::size_t max_len) {
  std::vector<Letter> letters;
  for (const auto& g : gens) {
    letters.emplace_back(g.family, g.index, -1);
    letters.emplace_back(g.family, g.index, 1);
  }
  std::sort(letters.begin(), letters.end());

  std::vector<FreeWord> out{FreeWord{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& l : letters) {
        if (!out[i].empty() && out[i].back().is_inverse_of(l)) continue;
        FreeWord next = out[i];
        next.push_back(l);
        out.push_back(std::move(next));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

namespace {

struct FreeWordHash {
  std::size_t operator()(const FreeWord& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& l : w) {
      const std::size_t v = (l.index << 3) ^ (static_cast<std::size_t>(l.family) << 1) ^ (l.sign > 0 ? 1u : 0u);
      h = (h ^ v) * 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

bool adjunction_free_oracle(const FreeWord& w, const GeneratorSet& y, std::size_t max_len) {
  if (!is_freely_reduced(w)) throw DomainError("adjunction_free_oracle: word is not freely reduced");
  if (uses_only(w, y)) throw DomainError("adjunction_free_oracle: word uses only letters of the subset");

  std::uint64_t fresh = 0;
  for (const auto& g : y) fresh = std::max(fresh, g.index + 1);
  for (const auto& l : w) fresh = std::max(fresh, l.index + 1);
  const Generator t{Family::a, fresh};

  GeneratorSet domain = y;
  domain.insert(t);

  const FreeWord w_inv = inverse(w);
  std::unordered_set<FreeWord, FreeWordHash> images;
  for (const auto& word : enumerate_reduced(domain, max_len)) {
    FreeWord image;
    for (const auto& l : word) {
      if (l.generator() == t) {
        const auto& piece = l.sign > 0 ? w : w_inv;
        image.insert(image.end(), piece.begin(), piece.end());
      } else {
        image.push_back(l);
      }
    }
    if (!images.insert(reduce_free(image)).second) return false;
  }
  return true;
}

std::string to_string(const FreeWord& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  out += ']';
  return out;
}

}  // namespace transword
