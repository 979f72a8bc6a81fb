#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mpc/matrix_product.hpp"
#include "mpc/poly.hpp"
#include "mpc/reed_solomon.hpp"

namespace mpc {

class UnitMPC;

/// Decoding radius min_j { (l-j+1)*tau_j + (l-j) } over j = 1..s, for
/// constituent list decoders correcting tau_1 <= ... errors on blocks.
uint64_t tau_bound(size_t l, std::span<const uint64_t> taus);

/// Greedy witness: sorts blocks by weight and assigns the lightest remaining
/// block to each slot. Returns the chosen block indices (0-based, one per
/// constituent) or nullopt when some slot's weight exceeds its tau_j. When
/// the total weight is at most tau_bound, a witness always exists.
std::optional<std::vector<size_t>> good_index_tuple(std::span<const uint64_t> block_weights,
                                                    std::span<const uint64_t> taus, uint64_t tau);

/// List decoder for one constituent: all codewords within tau of the input
/// block, plus the radius and (if known) the list-size cap.
struct BlockDecoder {
    std::function<std::vector<std::vector<uint32_t>>(std::span<const uint32_t>)> decode;
    uint64_t tau = 0;
    uint64_t list_cap = 0;  // 0 = unknown
};

struct DecodeOptions {
    bool trace = false;
    bool first_hit = false;              // stop after the first tuple with output
    std::optional<uint64_t> tau_override;  // final distance filter
};

/// Per-branch record of one elimination step: the list returned for the
/// branch with index `parent` in the previous step's branch order.
struct StepBranchTrace {
    size_t parent;
    std::vector<std::vector<uint32_t>> list;
};

struct StepTrace {
    size_t step;         // 1-based constituent index j
    size_t block;        // 0-based block index i_j
    std::vector<StepBranchTrace> branches;
};

struct TupleTrace {
    std::vector<size_t> tuple;  // 0-based block indices i_1..i_s
    std::vector<StepTrace> steps;
    uint64_t survivors = 0;     // branches reaching the final solve
    uint64_t accepted = 0;      // words passing membership + distance
};

struct DecodeOutput {
    std::vector<std::vector<uint32_t>> words;  // sorted, deduplicated
    std::vector<TupleTrace> traces;            // filled when options.trace
};

/// Bundles a matrix-product code with per-constituent list decoders. Borrows
/// the code objects; they must stay alive while this object is used.
class DecoderSpec {
public:
    /// GS-backed decoders for each constituent of a scalar MPC. Constituents
    /// must be Reed-Solomon (window view); multiplicities are per constituent.
    /// Constituents with dim 1 or with no RS structure fall back to exhaustive
    /// list decoding with radius floor((d-1)/2) unless tau_fallback overrides.
    static DecoderSpec for_scalar(const ScalarMPC& code, std::span<const uint64_t> multiplicities,
                                  std::span<const std::optional<uint64_t>> tau_fallback = {});
    static DecoderSpec for_unit(const UnitMPC& code, std::span<const uint64_t> multiplicities,
                                std::span<const std::optional<uint64_t>> tau_fallback = {});

    size_t s() const { return ldcs_.size(); }
    size_t l() const { return l_; }
    size_t block_length() const { return m_; }
    size_t length() const { return m_ * l_; }
    uint64_t tau() const { return tau_; }
    std::span<const uint64_t> taus() const { return taus_; }
    const BlockDecoder& block_decoder(size_t j) const { return ldcs_[j]; }

    /// All codewords within tau of received (the whole tuple sweep), sorted.
    DecodeOutput list_decode(std::span<const uint32_t> received,
                             const DecodeOptions& options = {}) const;
    /// Half-distance decoding: runs with the radius clamped to
    /// floor((dmin-1)/2) and first-hit on; at most one word can survive.
    std::optional<std::vector<uint32_t>> unique_decode(std::span<const uint32_t> received,
                                                       uint64_t dmin) const;

private:
    friend class UnitMPC;
    const Field* f_ = nullptr;
    const ScalarMPC* scalar_ = nullptr;
    const UnitMPC* unit_ = nullptr;
    size_t m_ = 0, l_ = 0;
    std::vector<BlockDecoder> ldcs_;
    std::vector<uint64_t> taus_;
    uint64_t tau_ = 0;
    // constituent membership tests for the re-check before re-encoding
    std::vector<std::function<bool(std::span<const uint32_t>)>> member_;
};

/// Builds a BlockDecoder from a window-view RS code via gs_list_decode.
BlockDecoder gs_block_decoder(const RSCode& code, uint64_t v);
/// Exhaustive fallback decoder over a small linear code.
BlockDecoder bruteforce_block_decoder(const LinearCode& code, uint64_t tau, uint64_t enum_cap = 1ull << 24);

} // namespace mpc
