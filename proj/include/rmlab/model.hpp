#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rmlab/bit_matrix.hpp"
#include "rmlab/prime_field_matrix.hpp"

namespace rmlab {

enum class Replacement { with, without };
enum class FieldKind { gf2, gfp };

[[nodiscard]] std::string to_string(Replacement r);
[[nodiscard]] Replacement parse_replacement(const std::string& text);

/// Complete description of one random-matrix model.
///
/// Every row index i owns r columns C_{i,j}; column C_{i,j} sits at index
/// j*n + i, so the matrix is r side-by-side n x n blocks. Each column gets a
/// unit on row i plus s-1 random rows.
struct ModelConfig {
    std::size_t n = 500;
    std::size_t r = 1;
    std::size_t s = 3;
    Replacement replacement = Replacement::without;
    FieldKind field = FieldKind::gf2;
    Residue p = 2;       // field order when field == gfp
    int gft_model = 1;   // 1, 2 or 3 when field == gfp
    /// Entry distribution for GF(t) models 2 and 3, indexed by residue
    /// (length p, f[0] == 0). Ignored by model 1.
    std::vector<double> f;
    std::uint64_t master_seed = 1;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;

    /// Short stable tag, e.g. "gf2-without-r1-s3" or "gf3-model1".
    [[nodiscard]] std::string tag() const;

    [[nodiscard]] std::size_t n_cols() const { return n * r; }

    friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

/// Uniform entry distribution over the nonzero residues of Z_p.
[[nodiscard]] std::vector<double> uniform_nonzero(Residue p);

/// Scalars derived from a GF(t) configuration:
/// gamma = probability an off-diagonal pair cancels the diagonal through a single entry,
/// alpha = probability all three entries sum to zero,
/// beta  = probability two random entries sum to zero.
struct GftParameters {
    double gamma = 0;
    double alpha = 0;
    double beta = 0;
};

[[nodiscard]] GftParameters gft_parameters(const ModelConfig& cfg);

struct Provenance {
    ModelConfig config;
    std::uint64_t trial = 0;
    std::uint64_t derived_seed = 0;
};

struct Gf2Sample {
    BitMatrix matrix;
    Provenance provenance;
};

struct GftSample {
    PrimeFieldMatrix matrix;
    Provenance provenance;
};

/// GF(2) sample. With replacement the s-1 random rows are i.i.d. uniform on
/// [n] and every entry, the diagonal included, is XOR-accumulated; without
/// replacement they are distinct rows drawn from [n] - {i}.
/// Deterministic in (cfg, trial).
[[nodiscard]] Gf2Sample sample_gf2(const ModelConfig& cfg, std::uint64_t trial);

/// GF(t) sample for models 1-3 (s = 3, without replacement). Row positions
/// come from the same stream and schedule as sample_gf2; entry values use a
/// separate stream.
[[nodiscard]] GftSample sample_gft(const ModelConfig& cfg, std::uint64_t trial);

/// Number of connected components of the functional graph i -> f(i) encoded by
/// an r = 1, s = 2 GF(2) sample (a zero column is a loop). Throws
/// std::invalid_argument when the matrix does not have that shape.
[[nodiscard]] std::size_t functional_graph_components(const BitMatrix& m);

}  // namespace rmlab
