#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qmaps/error.hpp"
#include "qmaps/qmap.hpp"

namespace qmaps {

/// A Q-partition Σ of a crisp set X: distinct Q-subsets with
/// (P1) Sx & Tx = ⊥ for S ≠ T, (P2) ⋁_S Sx = k, (P3) ⋁_x Sx = k.
///
/// Blocks are compared extensionally and kept in the order given.
template <QuantaleBackend Q>
class QPartition {
 public:
  using value_type = typename Q::value_type;
  using Block = std::vector<value_type>;  // membership indexed by X

  /// Validates (P1)-(P3) and block distinctness. Throws InvalidPartition.
  QPartition(std::shared_ptr<const Q> q, FiniteSet underlying, FiniteSet block_labels, std::vector<Block> blocks)
      : quantale_(std::move(q)),
        underlying_(std::move(underlying)),
        block_labels_(std::move(block_labels)),
        blocks_(std::move(blocks)) {
    validate();
  }

  const Q& quantale() const noexcept { return *quantale_; }
  const std::shared_ptr<const Q>& quantale_handle() const noexcept { return quantale_; }
  const FiniteSet& underlying() const noexcept { return underlying_; }
  const FiniteSet& block_labels() const noexcept { return block_labels_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const value_type& membership(std::size_t block, std::size_t x) const { return blocks_.at(block).at(x); }

  /// Same underlying set and the same blocks in the same order; labels are ignored.
  friend bool operator==(const QPartition& a, const QPartition& b) {
    return same_quantale(a.quantale_, b.quantale_) && a.underlying_ == b.underlying_ && a.blocks_ == b.blocks_;
  }

 private:
  void validate() const {
    const Q& q = *quantale_;
    const std::size_t nx = underlying_.size();
    if (block_labels_.size() != blocks_.size())
      throw InvalidPartition("one label per block", {std::to_string(block_labels_.size()) + " labels for " +
                                                     std::to_string(blocks_.size()) + " blocks"});
    for (std::size_t s = 0; s < blocks_.size(); ++s) {
      if (blocks_[s].size() != nx) throw InvalidPartition("block is total on X", {block_labels_.label(s)});
      for (std::size_t t = 0; t < s; ++t)
        if (blocks_[s] == blocks_[t]) throw InvalidPartition("blocks distinct", {block_labels_.label(t), block_labels_.label(s)});
    }
    for (std::size_t x = 0; x < nx; ++x) {
      auto cover = q.bottom();
      for (std::size_t s = 0; s < blocks_.size(); ++s) {
        cover = q.join(cover, blocks_[s][x]);
        for (std::size_t t = 0; t < s; ++t)
          if (!(q.mult(blocks_[s][x], blocks_[t][x]) == q.bottom()))
            throw InvalidPartition("(P1) Sx & Tx = ⊥", {block_labels_.label(t), block_labels_.label(s), underlying_.label(x)});
      }
      if (!(cover == q.unit())) throw InvalidPartition("(P2) join over blocks is k", {underlying_.label(x)});
    }
    for (std::size_t s = 0; s < blocks_.size(); ++s) {
      auto cover = q.bottom();
      for (std::size_t x = 0; x < nx; ++x) cover = q.join(cover, blocks_[s][x]);
      if (!(cover == q.unit())) throw InvalidPartition("(P3) join over X is k", {block_labels_.label(s)});
    }
  }

  std::shared_ptr<const Q> quantale_;
  FiniteSet underlying_;
  FiniteSet block_labels_;
  std::vector<Block> blocks_;
};

/// Σ_ζ = {S_y}, S_y x = ζ(x, y) & ζ*(y, x); blocks follow the target order of ζ.
/// Throws NotSurjective.
template <QuantaleBackend Q>
QPartition<Q> partition_from_surjection(const QMap<Q>& zeta) {
  if (!is_surjective(zeta)) throw NotSurjective("Q-map onto " + zeta.target().to_string() + " is not surjective");
  const Q& q = zeta.quantale();
  std::vector<typename QPartition<Q>::Block> blocks;
  for (std::size_t y = 0; y < zeta.target().size(); ++y) {
    typename QPartition<Q>::Block block;
    for (std::size_t x = 0; x < zeta.source().size(); ++x)
      block.push_back(q.mult(zeta.relation()(x, y), zeta.adjoint()(y, x)));
    blocks.push_back(std::move(block));
  }
  return QPartition<Q>(zeta.quantale_handle(), zeta.source(), zeta.target(), std::move(blocks));
}

/// ζ_Σ: X ⇸ Σ, ζ_Σ(x, S) = Sx. Its adjoint is ζ_Σ^op and it is surjective;
/// both facts are rechecked and a failure raises VerificationFailed.
template <QuantaleBackend Q>
QMap<Q> surjection_from_partition(const QPartition<Q>& sigma) {
  auto rel = Relation<Q>::generate(sigma.quantale_handle(), sigma.underlying(), sigma.block_labels(),
                                   [&](std::size_t x, std::size_t s) { return sigma.membership(s, x); });
  auto zeta = try_promote(rel);
  if (!zeta) throw VerificationFailed("ζ_Σ ⊣ ζ_Σ*", sigma.underlying().to_string());
  if (!(zeta->adjoint() == opposite(rel))) throw VerificationFailed("ζ_Σ* = ζ_Σ^op", sigma.block_labels().to_string());
  if (!is_surjective(*zeta)) throw VerificationFailed("ζ_Σ∘ζ_Σ* = id_Σ", sigma.block_labels().to_string());
  return *zeta;
}

/// Σ_{ζ_Σ} = Σ.
template <QuantaleBackend Q>
bool roundtrip_check(const QPartition<Q>& sigma) {
  return partition_from_surjection(surjection_from_partition(sigma)) == sigma;
}

}  // namespace qmaps
