#include "mpc/codespec.hpp"

#include <fstream>
#include <sstream>

namespace mpc {

namespace {

uint64_t parse_u64(const std::string& v, const std::string& what) {
    try {
        size_t pos = 0;
        uint64_t out = std::stoull(v, &pos);
        if (pos != v.size()) throw parse_error("");
        return out;
    } catch (const std::exception&) {
        throw parse_error("bad integer for " + what + ": '" + v + "'");
    }
}

struct KV {
    std::string key, value;  // value empty for bare flags
};

// key=value pairs; `gen` and `mod` swallow the rest of the line
std::vector<KV> parse_options(std::string_view rest) {
    std::vector<KV> out;
    size_t i = 0;
    while (i < rest.size()) {
        while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        if (i >= rest.size()) break;
        size_t start = i;
        while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i])) &&
               rest[i] != '=')
            ++i;
        std::string key(rest.substr(start, i - start));
        if (i >= rest.size() || rest[i] != '=') {
            out.push_back({key, ""});
            continue;
        }
        ++i;  // '='
        if (key == "gen" || key == "mod") {
            out.push_back({key, trim(rest.substr(i))});
            break;
        }
        start = i;
        while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        out.push_back({key, std::string(rest.substr(start, i - start))});
    }
    return out;
}

struct ConstituentLine {
    bool is_rs = false;
    uint64_t k = 0;
    uint64_t window = 1;
    std::string gen;
    std::optional<uint64_t> m;
    uint64_t v = 1;
    std::optional<uint64_t> tau;
};

} // namespace

std::vector<uint32_t> CodeSpec::encode(std::span<const uint32_t> message) const {
    check(message.size() == dim(), "message length must equal the code dimension");
    std::vector<std::vector<uint32_t>> msgs;
    size_t at = 0;
    for (size_t j = 0; j < s(); ++j) {
        size_t kj = constituent(j).dim();
        msgs.emplace_back(message.begin() + static_cast<ptrdiff_t>(at),
                          message.begin() + static_cast<ptrdiff_t>(at + kj));
        at += kj;
    }
    return scalar ? scalar->encode(msgs) : unit->encode(msgs);
}

DecoderSpec CodeSpec::decoder() const {
    if (scalar) return DecoderSpec::for_scalar(*scalar, multiplicities, tau_overrides);
    return DecoderSpec::for_unit(*unit, multiplicities, tau_overrides);
}

CodeSpec parse_code_spec(std::string_view text) {
    std::optional<uint64_t> field_p, field_m;
    std::string field_mod;
    std::vector<ConstituentLine> cons;
    std::optional<uint64_t> mat_rows, mat_cols;
    bool force_unit = false;
    std::vector<std::vector<std::string>> row_entries;

    size_t lineno = 0;
    for (const std::string& raw : split(text, '\n')) {
        ++lineno;
        std::string line = raw;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string& msg) {
            throw parse_error("line " + std::to_string(lineno) + ": " + msg);
        };

        size_t sp = line.find_first_of(" \t");
        std::string word = line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));

        if (word == "field") {
            if (field_p) fail("duplicate field line");
            for (const KV& kv : parse_options(rest)) {
                if (kv.key == "p") field_p = parse_u64(kv.value, "p");
                else if (kv.key == "m") field_m = parse_u64(kv.value, "m");
                else if (kv.key == "mod") field_mod = kv.value;
                else fail("unknown field option '" + kv.key + "'");
            }
            if (!field_p || !field_m) fail("field line needs p= and m=");
        } else if (word == "constituent") {
            size_t sp2 = rest.find_first_of(" \t");
            std::string kind = rest.substr(0, sp2);
            std::string opts = sp2 == std::string::npos ? "" : trim(rest.substr(sp2));
            ConstituentLine c;
            if (kind == "rs") c.is_rs = true;
            else if (kind != "cyclic") fail("constituent kind must be rs or cyclic");
            for (const KV& kv : parse_options(opts)) {
                if (kv.key == "k" && c.is_rs) c.k = parse_u64(kv.value, "k");
                else if (kv.key == "window" && c.is_rs) c.window = parse_u64(kv.value, "window");
                else if (kv.key == "gen" && !c.is_rs) c.gen = kv.value;
                else if (kv.key == "m" && !c.is_rs) c.m = parse_u64(kv.value, "m");
                else if (kv.key == "v") c.v = parse_u64(kv.value, "v");
                else if (kv.key == "tau") c.tau = parse_u64(kv.value, "tau");
                else fail("unknown constituent option '" + kv.key + "'");
            }
            if (c.is_rs && c.k == 0) fail("rs constituent needs k=");
            if (!c.is_rs && c.gen.empty()) fail("cyclic constituent needs gen=");
            cons.push_back(std::move(c));
        } else if (word == "matrix") {
            if (mat_rows) fail("duplicate matrix line");
            for (const KV& kv : parse_options(rest)) {
                if (kv.key == "rows") mat_rows = parse_u64(kv.value, "rows");
                else if (kv.key == "cols") mat_cols = parse_u64(kv.value, "cols");
                else if (kv.key == "unit" && kv.value.empty()) force_unit = true;
                else fail("unknown matrix option '" + kv.key + "'");
            }
            if (!mat_rows || !mat_cols) fail("matrix line needs rows= and cols=");
        } else if (word == "row") {
            std::vector<std::string> entries;
            for (const std::string& e : split(rest, ',')) entries.push_back(trim(e));
            row_entries.push_back(std::move(entries));
        } else {
            fail("unknown directive '" + word + "'");
        }
    }

    if (!field_p) throw parse_error("missing field line");
    if (cons.empty()) throw parse_error("missing constituent lines");
    if (!mat_rows) throw parse_error("missing matrix line");
    if (*mat_rows != cons.size())
        throw parse_error("matrix rows must match the constituent count");
    if (row_entries.size() != *mat_rows) throw parse_error("wrong number of row lines");
    for (const auto& r : row_entries)
        if (r.size() != *mat_cols) throw parse_error("row entry count must equal cols");

    CodeSpec spec;
    if (field_mod.empty()) {
        spec.field = std::make_unique<Field>(static_cast<uint32_t>(*field_p),
                                             static_cast<uint32_t>(*field_m));
    } else {
        Field base(static_cast<uint32_t>(*field_p), 1);
        Poly mod = Poly::parse(base, field_mod);
        std::vector<uint32_t> coeffs(mod.coeffs());
        coeffs.resize(*field_m + 1, 0);
        spec.field = std::make_unique<Field>(static_cast<uint32_t>(*field_p),
                                             static_cast<uint32_t>(*field_m), coeffs);
    }
    const Field& f = *spec.field;

    bool is_unit = force_unit;
    for (const auto& r : row_entries)
        for (const std::string& e : r)
            if (e.find('x') != std::string::npos) is_unit = true;

    // block length: every constituent must agree
    std::optional<size_t> block_m;
    auto meld_m = [&](size_t mj) {
        if (block_m && *block_m != mj)
            throw invariant_error("constituent lengths differ");
        block_m = mj;
    };

    std::vector<LinearCode> codes;
    for (const ConstituentLine& c : cons) {
        if (c.is_rs) {
            size_t mj = static_cast<size_t>(f.size() - 1);
            meld_m(mj);
            RSCode rs(f, c.k, c.window);
            if (is_unit) {
                LinearCode lc = LinearCode::cyclic_code(f, rs.generator_poly(), mj);
                lc.set_known_distance(mj - c.k + 1);
                codes.push_back(std::move(lc));
            } else {
                codes.push_back(rs.to_linear_code());
            }
        } else {
            size_t mj = c.m ? static_cast<size_t>(*c.m) : static_cast<size_t>(f.size() - 1);
            meld_m(mj);
            Poly gen = Poly::parse(f, c.gen);
            LinearCode lc = LinearCode::cyclic_code(f, gen, mj);
            if (auto rs = detect_rs_structure(f, lc))
                lc.set_known_distance(mj - lc.dim() + 1);
            codes.push_back(std::move(lc));
        }
        spec.multiplicities.push_back(c.v);
        spec.tau_overrides.push_back(c.tau);
    }

    size_t s = cons.size(), l = static_cast<size_t>(*mat_cols);
    if (is_unit) {
        std::vector<RingElem> entries;
        for (const auto& r : row_entries)
            for (const std::string& e : r) entries.push_back(RingElem::parse(f, *block_m, e));
        PolyMatrix a(f, *block_m, s, l, std::move(entries));
        spec.unit.emplace(f, std::move(codes), std::move(a));
    } else {
        Mat a(s, l);
        for (size_t r = 0; r < s; ++r)
            for (size_t c = 0; c < l; ++c) a.at(r, c) = f.parse(row_entries[r][c]);
        spec.scalar.emplace(f, std::move(codes), std::move(a));
    }
    return spec;
}

CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_code_spec(ss.str());
}

} // namespace mpc
