#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpc/decoder.hpp"
#include "mpc/matrix_product.hpp"
#include "mpc/unit_mpc.hpp"

namespace mpc {

/// A code loaded from the line-oriented spec format:
///
///   field p=2 m=4            # optional mod=<poly>, low term last
///   constituent rs k=10      # optional v=, window=, tau=
///   constituent cyclic gen=x^7 + a^6*x^6 + ... # optional m=, v=, tau=
///   matrix rows=2 cols=2     # append `unit` to force ring entries
///   row 1, 1
///   row 0, 1
///
/// '#' starts a comment. `gen=` and `mod=` capture the rest of the line.
/// Matrix entries are field-element tokens for a scalar code; any entry with
/// an x makes the matrix polynomial (entries act by multiplication mod
/// x^m - 1 and must be units or zero). One multiplicity v per constituent
/// feeds the list decoders; tau= forces an exhaustive constituent decoder
/// with that radius instead.
struct CodeSpec {
    std::unique_ptr<Field> field;
    std::optional<ScalarMPC> scalar;  // exactly one of scalar/unit is set
    std::optional<UnitMPC> unit;
    std::vector<uint64_t> multiplicities;
    std::vector<std::optional<uint64_t>> tau_overrides;

    size_t s() const { return scalar ? scalar->s() : unit->s(); }
    size_t l() const { return scalar ? scalar->l() : unit->l(); }
    size_t block_length() const { return scalar ? scalar->block_length() : unit->block_length(); }
    size_t length() const { return scalar ? scalar->length() : unit->length(); }
    size_t dim() const { return scalar ? scalar->dim() : unit->dim(); }
    const LinearCode& constituent(size_t j) const {
        return scalar ? scalar->constituent(j) : unit->constituent(j);
    }

    /// Splits a flat length-dim message into per-constituent messages.
    std::vector<uint32_t> encode(std::span<const uint32_t> message) const;
    /// Borrows this spec; keep it alive (and unmoved) while decoding.
    DecoderSpec decoder() const;
};

CodeSpec parse_code_spec(std::string_view text);
CodeSpec load_code_spec(const std::string& path);

} // namespace mpc
