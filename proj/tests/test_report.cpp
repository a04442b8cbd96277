#include "nrcn/report.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "nrcn/error.hpp"

using namespace nrcn;
using nlohmann::json;

namespace {

void expect_round_trip(const json& doc) {
    const std::string dumped = doc.dump();
    EXPECT_EQ(json::parse(dumped).dump(), dumped);
    EXPECT_TRUE(doc.contains("command"));
    EXPECT_TRUE(doc.contains("params"));
    EXPECT_TRUE(doc.contains("result"));
}

} // namespace

TEST(Report, TriangleText) {
    EXPECT_EQ(triangle_text(3, 4, Alignment::left), "1\n1 1\n1 2 1\n1 0 0 1\n");
    EXPECT_EQ(triangle_text(2, 1, Alignment::left), "1\n");
    EXPECT_EQ(triangle_text(2, 3, Alignment::center), "  1\n 1 1\n1 0 1\n");
    EXPECT_THROW(triangle_text(3, 1001, Alignment::left), ResourceLimitError);
    EXPECT_THROW(triangle_text(4, 3, Alignment::left), InvalidPrimeError);
}

TEST(Report, TriangleThreeFullFigure) {
    // 26 = <2,2,2>, so every j <= 26 is below it in the half-order: no zeros.
    const std::string text = triangle_text(3, 27, Alignment::left);
    const auto last_nl = text.rfind('\n', text.size() - 2);
    const std::string last = text.substr(last_nl + 1);
    EXPECT_EQ(last.find('0'), std::string::npos);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 27);
    const json doc = triangle_json(3, 27);
    expect_round_trip(doc);
    EXPECT_EQ(doc["result"][9], json({1, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(Report, NucleiText305) {
    const std::string text = nuclei_text(3, 305);
    EXPECT_NE(text.find("<0,0,0,0,0,0> = 0 <= k+1 < 243 = <1,0,0,0,0,0>  =>  dim N^k = -1\n"), std::string::npos);
    EXPECT_NE(text.find("<1,0,0,0,0,0> = 243 <= k+1 < 297 = <1,0,2,0,0,0>  =>  dim N^k = 179\n"), std::string::npos);
    EXPECT_NE(text.find("<1,0,2,0,0,0> = 297 <= k+1 < 306 = <1,0,2,1,0,0>  =>  dim N^k = 251\n"), std::string::npos);
    EXPECT_NE(text.find("n = 305 = <1,0,2,0,2,2>"), std::string::npos);
}

TEST(Report, NucleiJson) {
    const json doc = nuclei_json(3, 305);
    expect_round_trip(doc);
    EXPECT_EQ(doc["command"], "nuclei");
    EXPECT_EQ(doc["result"]["endianness"], "little");
    EXPECT_EQ(doc["result"]["n_digits"], json({2, 2, 0, 2, 0, 1}));
    const auto& rows = doc["result"]["rows"];
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0]["upper"], 243);
    EXPECT_EQ(rows[1]["dim"], 179);
    EXPECT_EQ(rows[2]["lower"], 297);
    EXPECT_EQ(rows[2]["upper"], 306);

    const json small = nuclei_json(2, 4);
    ASSERT_EQ(small["result"]["rows"].size(), 2u);
    EXPECT_EQ(small["result"]["rows"][1]["dim"], 2);

    const json single = nuclei_json(5, 3);
    ASSERT_EQ(single["result"]["rows"].size(), 1u);
    EXPECT_EQ(single["result"]["rows"][0]["dim"], -1);
    EXPECT_TRUE(single["result"]["point_nucleus"].is_null());
}

TEST(Report, Classes) {
    const std::string nine = classes_text(3, 9);
    EXPECT_NE(nine.find("class 2: Phi = 8, T = 9, max = 8\n"), std::string::npos);
    EXPECT_NE(classes_text(2, 4).find("class 2: Phi = 3"), std::string::npos);
    EXPECT_NE(classes_text(7, 5).find("all classes empty\n"), std::string::npos);
    const json doc = classes_json(3, 9);
    expect_round_trip(doc);
    EXPECT_EQ(doc["result"]["sigma_1"], 8);
    EXPECT_TRUE(classes_json(7, 5)["result"]["classes"].empty());
}

TEST(Report, VerificationExamples) {
    const auto gf4 = run_verification(2, 2, 4);
    EXPECT_TRUE(gf4.all_agree());
    bool found = false;
    for (const auto& r : gf4.records) {
        if (r.n == 4 && r.k == 3) {
            found = true;
            EXPECT_EQ(r.dim_formula, 2);
            EXPECT_EQ(r.dim_basis, 2);
            EXPECT_EQ(r.dim_geometric, 2);
            EXPECT_TRUE(r.agree);
        }
    }
    EXPECT_TRUE(found);
    EXPECT_NE(verification_text(gf4).find("   4    3        2      2          2  agree\n"), std::string::npos);
    expect_round_trip(verification_json(gf4));

    const auto gf2 = run_verification(2, 1, 2);
    ASSERT_FALSE(gf2.records.empty());
    const auto& conic = gf2.records.back();
    EXPECT_EQ(conic.n, 2u);
    EXPECT_EQ(conic.k, 1);
    EXPECT_EQ(conic.dim_geometric, 0);
    EXPECT_TRUE(conic.agree);

    const auto gf3 = run_verification(3, 1, 3);
    EXPECT_TRUE(gf3.all_agree());
    EXPECT_EQ(gf3.linalg.failures, 0u);
}

TEST(Report, VerificationOrderIndependentOfJobs) {
    const auto serial = run_verification(3, 2, 7, 5, 1);
    const auto parallel = run_verification(3, 2, 7, 5, 4);
    ASSERT_EQ(serial.records.size(), parallel.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        EXPECT_EQ(serial.records[i].n, parallel.records[i].n);
        EXPECT_EQ(serial.records[i].k, parallel.records[i].k);
        EXPECT_EQ(serial.records[i].dim_geometric, parallel.records[i].dim_geometric);
    }
    EXPECT_EQ(serial.linalg.failures, parallel.linalg.failures);
}

TEST(Report, VerificationLimits) {
    EXPECT_THROW(run_verification(2, 1, 13), ResourceLimitError);
    EXPECT_THROW(run_verification(2, 21, 4), ResourceLimitError);
    EXPECT_THROW(run_verification(6, 1, 4), InvalidPrimeError);
}
