/*
 * Copyright 2026 The kou authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "kou/catalog.hpp"
#include "kou/json_io.hpp"

using namespace kou;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(KOU_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int st = pclose(pipe);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string scratch(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("kou_test_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("element JSON round trip") {
    for (const std::string& name : {"x0", "x3", "sphere_ko0", "circle_zeta_w2", "real_ko2", "disk_bott"}) {
        CAPTURE(name);
        const FnElement u = generator(name).element;
        const json j = element_to_json(u);
        const FnElement v = element_from_json(json::parse(j.dump()));
        CHECK(*v.base == *u.base);
        CHECK(max_norm_residual(u, v) == 0.0);
        CHECK(element_to_json(v) == j);
    }
    CHECK(class_from_json(class_to_json(KU1)) == KU1);
    CHECK(class_from_json(json(-1)) == -1);
}

TEST_CASE("catalog listing and emission") {
    const Run list = run("catalog");
    CHECK(list.status == 0);
    for (const std::string& name : catalog_names()) CHECK(list.out.find(name) != std::string::npos);
    const Run a = run("catalog --emit sphere_ko0");
    const Run b = run("catalog --emit sphere_ko0");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(run("catalog --emit nope").status == 3);
}

TEST_CASE("classify an emitted generator") {
    const std::string path = scratch("sphere.json", run("catalog --emit sphere_ko0").out);
    const Run r = run("classify " + path + " --class 0");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.dump().find("\"chern\":1") != std::string::npos);
    CHECK(run("classify " + path + " --class 0").out == r.out);
}

TEST_CASE("boundary of the disk generator") {
    const FnElement z = make_element(make_ses("disk-id", 32).quotient, 1,
                                     [](const GridPoint& p) { return Matrix::Constant(1, 1, cplx(p.x[0], p.x[1])); });
    const std::string path = scratch("z.json", element_to_json(z).dump());
    const Run r = run("boundary " + path + " --ses disk-id --class KU1");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("\"chern\":1") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("selftest").status == 0);
    CHECK(run("classify /nonexistent/file.json").status == 4);
    CHECK(run("classify " + scratch("bad.json", "{not json")).status == 4);
    CHECK(run("classify " + scratch("schema.json", "{\"dim\": 1}")).status == 4);
    const FnElement bad = make_element(sample_space(SpaceKind::Point, 1, PointInvolution::Identity), 1,
                                       [](const GridPoint&) { return Matrix::Constant(1, 1, cplx(0.5, 0)); });
    CHECK(run("classify " + scratch("nonunitary.json", element_to_json(bad).dump()) + " --class KU1").status == 2);
    const FnElement torus = make_element(sample_space(SpaceKind::Torus2, 16, PointInvolution::Identity), 1,
                                         [](const GridPoint&) { return Matrix::Identity(1, 1); });
    CHECK(run("classify " + scratch("torus.json", element_to_json(torus).dump()) + " --class 3").status != 0);
    CHECK(run("boundary " + scratch("t.json", toeplitz_to_json(calkin_entry("calkin_v2").element).dump()) +
              " --ses toeplitz --class 2")
              .status == 0);
}
