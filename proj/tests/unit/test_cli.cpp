#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

/// Runs the CLI through the shell; `prefix` holds env assignments.
CliRun cli(const std::string& args, const std::string& prefix = "", bool merge_stderr = false) {
    std::string cmd = prefix + " '" WREATH_CLI "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

fs::path fresh_dir() {
    fs::path p = fs::temp_directory_path() / ("wreath-cli-" + std::to_string(std::random_device{}()));
    fs::remove_all(p);
    return p;
}

}  // namespace

TEST(Cli, UnknownIdListsValidIds) {
    CliRun r = cli("verify no/such/claim", "", true);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("no/such/claim"), std::string::npos);
    EXPECT_NE(r.out.find("blocks/w6/q3"), std::string::npos);
    EXPECT_NE(r.out.find("psu3/q3/negativity"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("--format yaml list-claims").code, 2);
    EXPECT_EQ(cli("--jobs 0 verify wreathed/n2").code, 2);
    EXPECT_EQ(cli("table w9").code, 2);
    EXPECT_EQ(cli("table w6 --q 5").code, 2);
    EXPECT_EQ(cli("module nothing").code, 2);
    EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, ListClaimsShowsSkipped) {
    CliRun r = cli("list-claims");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    std::size_t skipped = 0, extended = 0;
    for (auto& c : j) {
        if (c["tier"] == "skipped") {
            ++skipped;
            EXPECT_TRUE(c.contains("reason")) << c["id"];
        }
        if (c["tier"] == "extended") ++extended;
    }
    EXPECT_GT(skipped, 0u);
    EXPECT_GT(extended, 0u);
    CliRun t = cli("--format text list-claims");
    EXPECT_NE(t.out.find("[skipped]"), std::string::npos);
}

TEST(Cli, VerifySingleClaim) {
    CliRun r = cli("verify blocks/w6/q3");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["claims"].size(), 1u);
    auto& c = j["claims"][0];
    EXPECT_EQ(c["status"], "pass");
    EXPECT_EQ(c["computed"]["k"], 12);
    EXPECT_EQ(c["computed"]["l"], 3);
    EXPECT_EQ(j["summary"]["pass"], 1);
    EXPECT_FALSE(j.contains("timings"));
    EXPECT_FALSE(c.contains("runtime_seconds"));
    auto timed = nlohmann::json::parse(cli("--timings verify wreathed/n2").out);
    EXPECT_TRUE(timed.contains("timings"));
    EXPECT_TRUE(timed["claims"][0].contains("runtime_seconds"));
}

TEST(Cli, OutputFileAndTextFormat) {
    fs::path dir = fresh_dir();
    fs::create_directories(dir);
    fs::path f = dir / "r.json";
    CliRun r = cli("verify wreathed/n2 -o '" + f.string() + "'");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    ASSERT_TRUE(fs::exists(f));
    EXPECT_EQ(cli("verify wreathed/n2").out, [&] {
        std::ifstream in(f);
        return std::string((std::istreambuf_iterator<char>(in)), {});
    }());
    CliRun t = cli("--format text verify wreathed/n2");
    EXPECT_NE(t.out.find("pass"), std::string::npos);
    EXPECT_NE(t.out.find("wreathed/n2"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Cli, EnvironmentOverrides) {
    fs::path dir = fresh_dir();
    CliRun a = cli("verify blocks/w1/n2", "WREATH_CACHE_DIR='" + dir.string() + "'");
    EXPECT_EQ(a.code, 0);
    ASSERT_TRUE(fs::exists(dir));
    std::size_t files = 0;
    for (auto& e : fs::directory_iterator(dir)) files += e.path().extension() == ".json";
    EXPECT_GT(files, 0u);
    CliRun b = cli("verify blocks/w1/n2", "WREATH_CACHE_DIR='" + dir.string() + "' WREATH_JOBS=2");
    EXPECT_EQ(b.out, a.out);
    EXPECT_EQ(cli("verify wreathed/n2", "WREATH_JOBS=zero").code, 2);
    // the flag wins over the environment
    EXPECT_EQ(cli("--jobs 1 verify wreathed/n2", "WREATH_JOBS=4").code, 0);
    fs::remove_all(dir);
}

TEST(Cli, TableAndModule) {
    CliRun t = cli("table w1 --n 2");
    ASSERT_EQ(t.code, 0);
    auto j = nlohmann::json::parse(t.out);
    EXPECT_EQ(j["group_order"], 32);
    EXPECT_EQ(j["characters"].size(), 14u);
    CliRun m = cli("module psu3-q3-borel");
    ASSERT_EQ(m.code, 0);
    EXPECT_NE(m.out.find("14"), std::string::npos);
}
