#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nrcn/basep.hpp"
#include "nrcn/gf.hpp"

namespace nrcn {

enum class OutputFormat { text, json };
enum class Alignment { left, center };

inline constexpr std::size_t kMaxTriangleRows = 1000;
inline constexpr std::size_t kMaxVerifyN = 12;

// One (n, k) comparison of the three routes to dim N^k.
struct VerificationRecord {
    std::uint32_t p;
    std::uint32_t e;
    std::uint32_t q;
    std::size_t n;
    std::int64_t k;
    std::int64_t dim_formula;
    std::int64_t dim_basis;
    std::int64_t dim_geometric;
    // Geometric RREF basis is exactly the unit vectors of the basis indices.
    bool basis_match;
    bool agree;
    std::chrono::milliseconds elapsed;
};

// Randomised rank(m) = rank(m^T) and rank-nullity checks over the field.
struct LinalgSelfCheck {
    std::uint64_t seed;
    std::size_t cases;
    std::size_t failures;
};

struct VerificationSummary {
    Field field;
    std::size_t max_n;
    std::vector<VerificationRecord> records;
    LinalgSelfCheck linalg;

    bool all_agree() const;
};

VerificationRecord verify_one(const Field& field, std::size_t n, std::int64_t k);

// Every n in 2..max_n and every k in -1..n-1 with q >= k+1. Records are
// returned in (n, k) order whatever the number of worker threads.
VerificationSummary run_verification(std::uint64_t p, std::uint64_t e, std::size_t max_n,
                                     std::uint64_t seed = 1, unsigned jobs = 1);

LinalgSelfCheck linalg_self_check(const Field& field, std::uint64_t seed, std::size_t cases);

// Command renderers. JSON documents have the shape
// {"command": ..., "params": {...}, "result": ...}.
nlohmann::json triangle_json(std::uint64_t p, std::size_t rows);
std::string triangle_text(std::uint64_t p, std::size_t rows, Alignment align);

nlohmann::json nuclei_json(std::uint64_t p, Natural n);
std::string nuclei_text(std::uint64_t p, Natural n);

nlohmann::json classes_json(std::uint64_t p, Natural n);
std::string classes_text(std::uint64_t p, Natural n);

nlohmann::json verification_json(const VerificationSummary& summary);
std::string verification_text(const VerificationSummary& summary);

} // namespace nrcn
