// Copyright 2026 The QACA Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <cmath>
#include <fstream>
#include <string>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "qaca/dataset.hpp"
#include "qaca/error.hpp"

using Catch::Approx;
using Catch::Matchers::ContainsSubstring;
using namespace qaca;

namespace {

std::filesystem::path write_file(const testing::TempDir& dir, const std::string& name,
                                 const std::string& body) {
    const auto p = dir.path() / name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_CASE("iris loads with labels") {
    const Dataset ds = load_csv(testing::iris_path(), std::string("species"));
    CHECK(ds.size() == 150);
    CHECK(ds.dim() == 4);
    REQUIRE(ds.labels());
    CHECK(ds.num_classes() == 3);
    CHECK(ds.class_names().front() == "Iris-setosa");
    CHECK(ds.feature_names().front() == "sepal_length");
    const auto [lo, hi] = global_min_max(ds);
    CHECK(lo == 0.1);
    CHECK(hi == 7.9);
}

TEST_CASE("single unlabelled row") {
    testing::TempDir dir;
    const Dataset ds = load_csv(write_file(dir, "one.csv", "a,b\n1.0,2.0\n"));
    CHECK(ds.size() == 1);
    CHECK(ds.dim() == 2);
    CHECK_FALSE(ds.labels());
    CHECK(ds.instance(0).coords[1] == 2.0);
}

TEST_CASE("CSV errors name the offending cell") {
    testing::TempDir dir;
    SECTION("text in a feature cell") {
        const auto p = write_file(dir, "bad.csv", "a,b,label\n1,2,x\n3,oops,y\n");
        CHECK_THROWS_WITH(load_csv(p, std::string("label")),
                          ContainsSubstring("row 2") && ContainsSubstring("'b'"));
    }
    SECTION("ragged row") {
        const auto p = write_file(dir, "ragged.csv", "a,b\n1,2\n3\n");
        CHECK_THROWS_WITH(load_csv(p), ContainsSubstring("row 2"));
    }
    SECTION("missing label column") {
        const auto p = write_file(dir, "nolabel.csv", "a,b\n1,2\n");
        CHECK_THROWS_AS(load_csv(p, std::string("species")), InputError);
    }
    SECTION("empty file") {
        CHECK_THROWS_AS(load_csv(write_file(dir, "empty.csv", "")), InputError);
        CHECK_THROWS_AS(load_csv(write_file(dir, "header.csv", "a,b\n")), InputError);
    }
    SECTION("missing file") {
        CHECK_THROWS_AS(load_csv(dir.path() / "absent.csv"), InputError);
    }
}

TEST_CASE("labels are numbered by first appearance") {
    testing::TempDir dir;
    const auto p = write_file(dir, "l.csv", "\xEF\xBB\xBFx,cls\n1,b\n2,a\n3,b\n");
    const Dataset ds = load_csv(p, std::string("cls"));
    CHECK(*ds.labels() == std::vector<int>{0, 1, 0});
    CHECK(ds.class_names() == std::vector<std::string>{"b", "a"});
    CHECK(ds.feature_names() == std::vector<std::string>{"x"});
}

TEST_CASE("global_min_max") {
    CHECK(global_min_max(Dataset({0, 6, 2, 3}, 2)) == std::pair<double, double>{0.0, 6.0});
    CHECK(global_min_max(Dataset({5, 5}, 2)) == std::pair<double, double>{5.0, 5.0});
}

TEST_CASE("dataset construction rejects bad input") {
    CHECK_THROWS(Dataset({}, 2));
    CHECK_THROWS(Dataset({1, 2, 3}, 2));
    CHECK_THROWS(Dataset({1, INFINITY}, 2));
    CHECK_THROWS(Dataset({1, 2}, 2, std::vector<int>{0, 1}));
}

TEST_CASE("standardize_features") {
    SECTION("single column") {
        const Dataset z = standardize_features(Dataset({1, 2, 3}, 1));
        CHECK(z.values()[0] == Approx(-1.224744871391589));
        CHECK(z.values()[1] == Approx(0.0).margin(1e-15));
        CHECK(z.values()[2] == Approx(1.224744871391589));
    }
    SECTION("constant column") {
        const Dataset z = standardize_features(Dataset({5, 5}, 1));
        CHECK(z.values()[0] == 0.0);
        CHECK(z.values()[1] == 0.0);
    }
    SECTION("iris columns are independently standardized") {
        const Dataset ds = load_csv(testing::iris_path(), std::string("species"));
        const Dataset z = standardize_features(ds);
        CHECK(z.labels() == ds.labels());
        for (const auto& s : z.attribute_stats()) {
            CHECK(std::abs(s.mean) < 1e-12);
            CHECK(std::abs(s.std - 1.0) < 1e-12);
        }
    }
}
