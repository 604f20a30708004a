#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "xhopf_cli/cli.hpp"

namespace {

const std::filesystem::path kDocs = XHOPF_DOCUMENTS_DIR;

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = {}) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = xhopf::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string doc(const char* name) { return (kDocs / name).string(); }

TEST(Cli, VerifyPassesOnShippedStructures) {
    for (const auto& [file, target] : std::vector<std::pair<const char*, const char*>>{
             {"k_xi_z2.json", "k_xi_z2"},
             {"k_xi_z2.json", "free2"},
             {"k_xi_z2.json", "sum_e"},
             {"bichar_z2.json", "bichar_z2"},
             {"bichar_z2.json", "bichar_z2_dual"},
             {"bichar_z2.json", "g"},
             {"bichar_z2.json", "sum"},
             {"sign_twisted_z2.json", "twisted"},
             {"a3_in_s3.json", "k_xi_a3"},
             {"a3_in_s3.json", "S3"}}) {
        const Outcome o = run({"verify", target, "-i", doc(file)});
        EXPECT_EQ(o.code, xhopf::cli::kPass) << file << " " << target << "\n" << o.out << o.err;
        EXPECT_NE(o.out.find("result = pass"), std::string::npos) << o.out;
    }
}

TEST(Cli, IntegralsAreOneDimensional) {
    const Outcome o = run({"integrals", "k_xi_z2", "-i", doc("k_xi_z2.json")});
    EXPECT_EQ(o.code, xhopf::cli::kPass) << o.out;
    EXPECT_NE(o.out.find("dim = 1"), std::string::npos) << o.out;
}

TEST(Cli, HomBasisBetweenOneDimensionalModules) {
    const Outcome o = run({"hom", "k_xi_z2", "k1", "kh", "--degree", "e", "--json", "-i", doc("k_xi_z2.json")});
    ASSERT_EQ(o.code, xhopf::cli::kPass) << o.out << o.err;
    EXPECT_NE(o.out.find("\"dim\": 1"), std::string::npos) << o.out;
    const Outcome zero = run({"hom", "k_xi_z2", "k1", "kh", "--degree", "1", "-i", doc("k_xi_z2.json")});
    EXPECT_EQ(zero.code, xhopf::cli::kPass);
    EXPECT_NE(zero.out.find("dim = 0"), std::string::npos) << zero.out;
}

TEST(Cli, ReadsStandardInput) {
    std::ifstream f(doc("bichar_z2.json"));
    std::stringstream ss;
    ss << f.rdbuf();
    const Outcome o = run({"grouplikes", "bichar_z2", "--json"}, ss.str());
    EXPECT_EQ(o.code, xhopf::cli::kPass) << o.err;
    EXPECT_NE(o.out.find("\"command\": \"grouplikes\""), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("fnv1a64:" + xhopf::cli::fnv1a64(ss.str())), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(run({"verify", "x", "-i", doc("missing.json")}).code, xhopf::cli::kInputError);
    EXPECT_EQ(run({"verify", "x"}, "{ not json").code, xhopf::cli::kInputError);
    EXPECT_EQ(run({"verify", "nothing", "-i", doc("k_xi_z2.json")}).code, xhopf::cli::kInputError);
    const Outcome bad = run({"verify", "b"}, R"j({"field": "Q", "groups": {"Z2": {"cyclic": 2}}, "hopf": {"b": {"construct": "bicharacter", "E": "Z2", "G": "Z2", "omega": [["1", "1"], ["1", "1/0"]]}}})j");
    EXPECT_EQ(bad.code, xhopf::cli::kInputError);
    EXPECT_NE(bad.err.find("/hopf/b/omega/1/1"), std::string::npos) << bad.err;
    EXPECT_EQ(run({"frobnicate"}).code, xhopf::cli::kInputError);
}

TEST(Cli, MutationsExitOneWithWitnesses) {
    std::ifstream manifest(kDocs / "mutations" / "manifest.txt");
    std::string file, target;
    int count = 0;
    while (manifest >> file >> target) {
        const Outcome o = run({"verify", target, "-i", (kDocs / "mutations" / file).string()});
        EXPECT_EQ(o.code, xhopf::cli::kCheckFailed) << file << "\n" << o.out << o.err;
        EXPECT_NE(o.out.find("witness:"), std::string::npos) << file << "\n" << o.out;
        ++count;
    }
    EXPECT_EQ(count, 10);
}

TEST(Cli, ExportIsAFixpoint) {
    const Outcome first = run({"export", "-i", doc("k_xi_z2.json")});
    ASSERT_EQ(first.code, xhopf::cli::kPass) << first.err;
    const Outcome second = run({"export"}, first.out);
    EXPECT_EQ(second.out, first.out);
}

TEST(Cli, OutputIsDeterministicAcrossJobs) {
    for (const auto& [file, target] : std::vector<std::pair<const char*, const char*>>{
             {"k_xi_z2.json", "k_xi_z2"},
             {"bichar_z2.json", "bichar_z2"},
             {"sign_twisted_z2.json", "twisted"},
             {"a3_in_s3.json", "k_xi_a3"}}) {
        const Outcome serial = run({"report", target, "--json", "-i", doc(file)});
        EXPECT_EQ(serial.code, xhopf::cli::kPass) << file << serial.out << serial.err;
        EXPECT_EQ(run({"report", target, "--json", "-i", doc(file)}).out, serial.out) << file;
        EXPECT_EQ(run({"report", target, "--json", "-j", "4", "-i", doc(file)}).out, serial.out) << file;
    }
}

TEST(Cli, HashIsStable) {
    EXPECT_EQ(xhopf::cli::fnv1a64(""), "cbf29ce484222325");
    EXPECT_EQ(xhopf::cli::fnv1a64("a"), "af63dc4c8601ec8c");
}

} // namespace
