// End-to-end runs of the installed binary. The path arrives via the
// ATLASGRAPH_BIN environment variable (set by ctest).

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "atlasgraph/canon.hpp"
#include "atlasgraph/io.hpp"
#include "builders.hpp"
#include "subprocess.hpp"

using namespace atlasgraph;
using namespace atlasgraph::testing;

namespace {

std::string binary() {
    const char* bin = std::getenv("ATLASGRAPH_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "ATLASGRAPH_BIN must point at the CLI binary");
    return bin;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / "atlasgraph_cli_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

std::filesystem::path torus_file() {
    return write_temp("torus.graph", render_graph(dipole(3)));
}

std::filesystem::path sphere_file() {
    return write_temp("sphere.graph", render_graph(path_graph({1, 1})));
}

}  // namespace

TEST_CASE("cli rank on the torus") {
    const auto r = run_command(binary() + " rank " + shell_quote(torus_file().string()));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "simple_rank=0\nlabel_excess=2\nlabeled_rank=2\n");
}

TEST_CASE("cli pi1 on the torus") {
    const auto r = run_command(binary() + " pi1 " + shell_quote(torus_file().string()));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "generators 2\na0: 0 1 0\na1: 0 1 0\n");
}

TEST_CASE("cli pi1 respects the basepoint") {
    const auto r = run_command(binary() + " pi1 --basepoint 1 " +
                               shell_quote(torus_file().string()));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "generators 2\na0: 1 0 1\na1: 1 0 1\n");
}

TEST_CASE("cli classify distinguishes sphere from torus by exit code") {
    const auto sphere = run_command(binary() + " classify " +
                                    shell_quote(sphere_file().string()));
    CHECK(sphere.exit_code == 0);
    CHECK(sphere.output.find("homotopy_sphere=true") != std::string::npos);
    CHECK(sphere.output.find("minimal_atlas_valid=false") != std::string::npos);

    const auto torus = run_command(binary() + " classify " +
                                   shell_quote(torus_file().string()));
    CHECK(torus.exit_code == 2);
    CHECK(torus.output.find("homotopy_sphere=false") != std::string::npos);
    CHECK(torus.output.find("labeled_rank=2") != std::string::npos);
    CHECK(torus.output.find("minimal_atlas_valid=true") != std::string::npos);
}

TEST_CASE("cli canon prints the library hex") {
    const auto r = run_command(binary() + " canon " + shell_quote(torus_file().string()));
    CHECK(r.exit_code == 0);
    CHECK(r.output == to_hex(canonical_form(dipole(3))) + "\n");
}

TEST_CASE("cli dot matches the library export") {
    const auto r = run_command(binary() + " dot " + shell_quote(torus_file().string()));
    CHECK(r.exit_code == 0);
    CHECK(r.output == render_dot(dipole(3)));
}

TEST_CASE("cli iso") {
    const auto swapped = write_temp("torus_swapped.graph",
                                    "atlasgraph 1\nvertex 1 2\nvertex 0 2\nedge 1 0 3\n");
    const auto same = run_command(binary() + " iso " + shell_quote(torus_file().string()) + " " +
                                  shell_quote(swapped.string()));
    CHECK(same.exit_code == 0);
    CHECK(same.output == "isomorphic\n");

    const auto diff = run_command(binary() + " iso " + shell_quote(torus_file().string()) + " " +
                                  shell_quote(sphere_file().string()));
    CHECK(diff.exit_code == 2);
    CHECK(diff.output == "non-isomorphic\n");
}

TEST_CASE("cli count-graphs") {
    const auto r = run_command(binary() + " count-graphs --order 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "112\n");
}

TEST_CASE("cli enumerate to stdout and to a file") {
    const auto direct = run_command(binary() + " enumerate --order 2 --max-label 3 2>/dev/null");
    CHECK(direct.exit_code == 0);
    CHECK(std::count(direct.output.begin(), direct.output.end(), '\n') == 2);

    const auto out_path =
        std::filesystem::temp_directory_path() / "atlasgraph_cli_tests" / "catalog.txt";
    const auto filed = run_command(binary() + " enumerate --order 2 --max-label 3 --out " +
                                   shell_quote(out_path.string()));
    CHECK(filed.exit_code == 0);
    CHECK(filed.output == "2\n");
    std::ifstream in(out_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == direct.output);

    // Records parse back and mention the torus class.
    CHECK(text.find(to_hex(canonical_form(dipole(3)))) != std::string::npos);
}

TEST_CASE("cli enumerate --jobs output is identical") {
    const auto solo = run_command(binary() + " enumerate --order 5 --max-label 2 2>/dev/null");
    const auto team =
        run_command(binary() + " enumerate --order 5 --max-label 2 --jobs 4 2>/dev/null");
    CHECK(solo.exit_code == 0);
    CHECK(team.exit_code == 0);
    CHECK(solo.output == team.output);
}

TEST_CASE("cli failures exit 1 with a diagnostic") {
    const auto missing = run_command(binary() + " rank /nonexistent.graph 2>&1");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("error:") != std::string::npos);

    const auto bad = write_temp("bad.graph", "atlasgraph 1\nvertex 0 2\nedge 0 5 1\n");
    const auto r = run_command(binary() + " rank " + shell_quote(bad.string()) + " 2>&1");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("error:") != std::string::npos);

    const auto noargs = run_command(binary() + " 2>&1");
    CHECK(noargs.exit_code == 1);

    const auto toobig = run_command(binary() + " count-graphs --order 12 2>&1");
    CHECK(toobig.exit_code == 1);
    CHECK(toobig.output.find("error:") != std::string::npos);
}

TEST_CASE("cli output bytes are stable across runs") {
    for (const std::string cmd :
         {std::string(" classify "), std::string(" rank "), std::string(" canon ")}) {
        const auto first = run_command(binary() + cmd + shell_quote(torus_file().string()));
        const auto second = run_command(binary() + cmd + shell_quote(torus_file().string()));
        CHECK(first.output == second.output);
        CHECK(first.exit_code == second.exit_code);
    }
}
