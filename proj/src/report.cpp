#include "nrcn/report.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "nrcn/classes.hpp"
#include "nrcn/curve.hpp"
#include "nrcn/error.hpp"
#include "nrcn/linalg.hpp"
#include "nrcn/nuclei.hpp"

namespace nrcn {

using nlohmann::json;

namespace {

json document(const std::string& command, json params, json result) {
    json doc;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["result"] = std::move(result);
    return doc;
}

json little_endian(const Digits& d) {
    return json(std::vector<std::uint32_t>(d.digits().begin(), d.digits().end()));
}

Matrix unit_rows(const Field& f, std::size_t cols, const std::vector<Natural>& indices) {
    Matrix m(f, indices.size(), cols);
    for (std::size_t r = 0; r < indices.size(); ++r) {
        m.set(r, static_cast<std::size_t>(indices[r]), f.one());
    }
    return m;
}

// Largest i with a non-empty class in row n, or 0 if there is none.
Natural largest_nonempty_class(Natural n, std::uint64_t p) {
    const auto size = to_base_p(n, p).size();
    for (Natural i = size; i-- > 1;) {
        if (!is_class_empty(i, n, p)) {
            return i;
        }
    }
    return 0;
}

} // namespace

bool VerificationSummary::all_agree() const {
    return linalg.failures == 0 &&
           std::all_of(records.begin(), records.end(), [](const auto& r) { return r.agree && r.basis_match; });
}

VerificationRecord verify_one(const Field& field, std::size_t n, std::int64_t k) {
    const auto start = std::chrono::steady_clock::now();
    const CurveContext ctx(field, n);
    const std::uint32_t p = field.characteristic();

    VerificationRecord rec{};
    rec.p = p;
    rec.e = field.degree();
    rec.q = field.order();
    rec.n = n;
    rec.k = k;
    rec.dim_formula = nucleus_dim(k, n, p);
    const auto indices = nucleus_basis_indices(k, n, p);
    rec.dim_basis = static_cast<std::int64_t>(indices.size()) - 1;
    const Subspace nucleus = geometric_nucleus(ctx, k);
    rec.dim_geometric = nucleus.projective_dim();
    rec.basis_match = nucleus.basis() == unit_rows(field, n + 1, indices);
    rec.agree = rec.dim_formula == rec.dim_basis && rec.dim_basis == rec.dim_geometric;
    rec.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return rec;
}

LinalgSelfCheck linalg_self_check(const Field& field, std::uint64_t seed, std::size_t cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> entry(0, field.order() - 1);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    LinalgSelfCheck out{seed, cases, 0};
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t rows = c % 2 == 0 ? 6 : dim(rng);
        const std::size_t cols = c % 2 == 0 ? 8 : dim(rng);
        std::vector<std::uint32_t> idx(rows * cols);
        for (auto& v : idx) {
            v = entry(rng);
        }
        const Matrix m = Matrix::from_indices(field, rows, cols, idx);
        const std::size_t r = rank(m);
        const Matrix kernel = nullspace_basis(m);
        const Matrix product = m.multiply(kernel.transpose());
        const bool annihilated = product == Matrix(field, rows, kernel.rows());
        if (r != rank(m.transpose()) || r + kernel.rows() != cols || !annihilated) {
            ++out.failures;
        }
    }
    return out;
}

VerificationSummary run_verification(std::uint64_t p, std::uint64_t e, std::size_t max_n, std::uint64_t seed,
                                     unsigned jobs) {
    if (max_n > kMaxVerifyN) {
        throw ResourceLimitError("max_n = " + std::to_string(max_n) + " exceeds " + std::to_string(kMaxVerifyN));
    }
    if (max_n < 2) {
        throw DomainError("max_n must be at least 2");
    }
    Field field = make_field(p, e);

    struct Task {
        std::size_t n;
        std::int64_t k;
    };
    std::vector<Task> tasks;
    for (std::size_t n = 2; n <= max_n; ++n) {
        for (std::int64_t k = -1; k <= static_cast<std::int64_t>(n) - 1; ++k) {
            if (static_cast<std::int64_t>(field.order()) >= k + 1) {
                tasks.push_back({n, k});
            }
        }
    }

    std::vector<VerificationRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            records[t] = verify_one(field, tasks[t].n, tasks[t].k);
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }

    LinalgSelfCheck check = linalg_self_check(field, seed, 100);
    return VerificationSummary{std::move(field), max_n, std::move(records), check};
}

json triangle_json(std::uint64_t p, std::size_t rows) {
    if (rows > kMaxTriangleRows) {
        throw ResourceLimitError("at most " + std::to_string(kMaxTriangleRows) + " rows");
    }
    return document("triangle", json{{"p", p}, {"rows", rows}}, json(pascal_triangle_mod_p(p, rows)));
}

std::string triangle_text(std::uint64_t p, std::size_t rows, Alignment align) {
    if (rows > kMaxTriangleRows) {
        throw ResourceLimitError("at most " + std::to_string(kMaxTriangleRows) + " rows");
    }
    std::vector<std::string> lines;
    for (const auto& row : pascal_triangle_mod_p(p, rows)) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j != 0) {
                line += ' ';
            }
            line += std::to_string(row[j]);
        }
        lines.push_back(std::move(line));
    }
    const std::size_t widest = lines.empty() ? 0 : lines.back().size();
    std::string out;
    for (const auto& line : lines) {
        if (align == Alignment::center) {
            out.append((widest - line.size()) / 2, ' ');
        }
        out += line;
        out += '\n';
    }
    return out;
}

json nuclei_json(std::uint64_t p, Natural n) {
    const NucleusReport report = nuclei_table(n, p);
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back(json{{"k_low", r.k_low},
                            {"k_high", r.k_high},
                            {"lower", r.lower},
                            {"upper", r.upper},
                            {"lower_digits", little_endian(to_base_p(r.lower, p))},
                            {"upper_digits", little_endian(to_base_p(r.upper, p))},
                            {"R", r.R},
                            {"dim", r.dim}});
    }
    json result{{"n", n},
                {"b", report.b},
                {"n_digits", little_endian(to_base_p(n, p))},
                {"b_digits", little_endian(to_base_p(report.b, p))},
                {"endianness", "little"},
                {"d", report.d()},
                {"rows", rows},
                {"empty_threshold", empty_threshold(n, p)},
                {"timmermann_dim", timmermann_dim(n, p)}};
    if (auto pt = point_nucleus(n, p)) {
        result["point_nucleus"] = json{{"i", pt->i}, {"point_index", pt->point_index}};
    } else {
        result["point_nucleus"] = nullptr;
    }
    return document("nuclei", json{{"p", p}, {"n", n}}, std::move(result));
}

std::string nuclei_text(std::uint64_t p, Natural n) {
    const NucleusReport report = nuclei_table(n, p);
    const Digits nd = to_base_p(n, p);
    const Digits bd = to_base_p(report.b, p);
    const std::size_t width = bd.size();
    std::ostringstream os;
    os << "p = " << p << ", n = " << n << " = " << nd.big_endian(width) << ", b = n+1 = " << report.b << " = "
       << bd.big_endian(width) << '\n';
    for (const auto& r : report.rows) {
        os << to_base_p(r.lower, p).big_endian(width) << " = " << r.lower << " <= k+1 < " << r.upper << " = "
           << to_base_p(r.upper, p).big_endian(width) << "  =>  dim N^k = " << r.dim << '\n';
    }
    os << "distinct nuclei: " << report.d() << '\n';
    os << "dim N^(n-1) = n - prod(n_i + 1) = " << timmermann_dim(n, p) << '\n';
    os << "empty for k <= " << empty_threshold(n, p) << '\n';
    if (auto pt = point_nucleus(n, p)) {
        os << "point nucleus: n = 2*" << p << "^" << pt->i << " - 2, base point P_" << pt->point_index << '\n';
    }
    return os.str();
}

json classes_json(std::uint64_t p, Natural n) {
    const Natural top = largest_nonempty_class(n, p);
    json classes = json::array();
    for (Natural i = 1; i <= top; ++i) {
        const auto max_member = max_class_member(i, n, p);
        classes.push_back(json{{"i", i},
                               {"phi", phi(i, n, p)},
                               {"top_line", top_line(ExtendedNatural(i), n + 1, p)},
                               {"max_member", max_member ? json(*max_member) : json(nullptr)}});
    }
    json result{{"n", n},
                {"b", n + 1},
                {"n_digits", little_endian(to_base_p(n, p))},
                {"endianness", "little"},
                {"classes", classes},
                {"sigma_1", sigma(1, n, p)}};
    return document("classes", json{{"p", p}, {"n", n}}, std::move(result));
}

std::string classes_text(std::uint64_t p, Natural n) {
    const Natural top = largest_nonempty_class(n, p);
    std::ostringstream os;
    os << "p = " << p << ", n = " << n << " = " << to_base_p(n, p).big_endian() << '\n';
    if (top == 0) {
        os << "all classes empty\n";
    }
    for (Natural i = 1; i <= top; ++i) {
        const auto max_member = max_class_member(i, n, p);
        os << "class " << i << ": Phi = " << phi(i, n, p) << ", T = " << top_line(ExtendedNatural(i), n + 1, p)
           << ", max = " << (max_member ? std::to_string(*max_member) : std::string("empty")) << '\n';
    }
    os << "Sigma(1,n) = " << sigma(1, n, p) << " zero entries in row " << n << '\n';
    return os.str();
}

json verification_json(const VerificationSummary& s) {
    const Field& f = s.field;
    json records = json::array();
    for (const auto& r : s.records) {
        records.push_back(json{{"p", r.p},
                               {"e", r.e},
                               {"q", r.q},
                               {"n", r.n},
                               {"k", r.k},
                               {"dim_formula", r.dim_formula},
                               {"dim_basis", r.dim_basis},
                               {"dim_geometric", r.dim_geometric},
                               {"basis_match", r.basis_match},
                               {"agree", r.agree},
                               {"elapsed_ms", r.elapsed.count()}});
    }
    json field{{"p", f.characteristic()},
               {"e", f.degree()},
               {"q", f.order()},
               {"modulus", std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end())}};
    json result{{"field", field},
                {"records", records},
                {"linalg_check", json{{"seed", s.linalg.seed}, {"cases", s.linalg.cases}, {"failures", s.linalg.failures}}},
                {"all_agree", s.all_agree()}};
    return document("verify",
                    json{{"p", f.characteristic()}, {"e", f.degree()}, {"max_n", s.max_n}, {"seed", s.linalg.seed}},
                    std::move(result));
}

std::string verification_text(const VerificationSummary& s) {
    std::ostringstream os;
    os << "GF(" << s.field.order() << ") = GF(" << s.field.characteristic() << "^" << s.field.degree() << ")\n";
    os << "   n    k  formula  basis  geometric  status\n";
    std::size_t bad = 0;
    for (const auto& r : s.records) {
        const bool ok = r.agree && r.basis_match;
        bad += ok ? 0 : 1;
        char line[96];
        std::snprintf(line, sizeof line, "%4zu %4lld %8lld %6lld %10lld  %s\n", r.n, static_cast<long long>(r.k),
                      static_cast<long long>(r.dim_formula), static_cast<long long>(r.dim_basis),
                      static_cast<long long>(r.dim_geometric), ok ? "agree" : "MISMATCH");
        os << line;
    }
    os << "linalg self-check: " << s.linalg.cases - s.linalg.failures << "/" << s.linalg.cases << " passed (seed "
       << s.linalg.seed << ")\n";
    os << s.records.size() << " records, " << bad << " mismatches\n";
    return os.str();
}

} // namespace nrcn
