#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "rmlab/model.hpp"

namespace rmlab {

enum class AuditFamily { r1s2, r2s2, r2s3, gf3_model1 };

[[nodiscard]] std::string to_string(AuditFamily f);
[[nodiscard]] AuditFamily parse_audit_family(const std::string& text);

/// The model an audit family samples. r1s2 uses replacement so the functional
/// graph is a uniform random mapping (fixed points included).
[[nodiscard]] ModelConfig audit_config(AuditFamily f, std::size_t n, std::uint64_t seed);

struct AuditReport {
    AuditFamily family = AuditFamily::r1s2;
    std::string tag;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    /// Hard failures: r1s2 corank != component count; gf3_model1 corank == 0.
    std::size_t violations = 0;
    /// Trials showing the expected corank (0 for r2s3, 1 for r2s2 and gf3_model1).
    std::size_t hits = 0;
    double fraction = 0;
    double threshold = 0.99;  // r1s2 ignores it
    bool pass = false;
};

[[nodiscard]] AuditReport special_case_audit(AuditFamily family, std::size_t n, std::size_t trials,
                                             std::uint64_t seed, int workers);

}  // namespace rmlab
