// Copyright 2026 The Pentagram Atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "pentagram/derived.hpp"
#include "pentagram/io.hpp"
#include "pentagram/verify.hpp"
#include "support.hpp"

using namespace pentagram;
using pentagram::testing::all_pentagrams;
using pentagram::testing::atlas;
using pentagram::testing::TempDir;

namespace {

std::filesystem::path source(const std::string &rel) {
    return std::filesystem::path(PENTAGRAM_SOURCE_DIR) / rel;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("pentagram records round-trip", "[json]") {
    for (std::size_t i = 0; i < all_pentagrams().size(); i += 97) {
        const Pentagram &p = all_pentagrams()[i];
        const json j = to_json(p);
        CHECK(pentagram_from_json(json::parse(j.dump())) == p);
        CHECK(j.at("neg") == p.negative_context_count);
        CHECK(j.at("contexts").size() == 5);
    }
}

TEST_CASE("pentagram records are re-validated on load", "[json]") {
    json j = to_json(mermin_pentagram());
    SECTION("wrong parity field") {
        j["neg"] = 3;
        CHECK_THROWS_AS(pentagram_from_json(j), Error);
    }
    SECTION("a context swapped for a disjoint one") {
        j["contexts"][0] = json::array({Observable::parse("ZII").id(), Observable::parse("IZI").id(),
                                        Observable::parse("IIZ").id(), Observable::parse("ZZZ").id()});
        CHECK_THROWS_AS(pentagram_from_json(j), Error);
    }
    SECTION("the identity id") {
        j["contexts"][0][0] = 0;
        CHECK_THROWS_AS(pentagram_from_json(j), Error);
    }
}

TEST_CASE("contexts and planes serialize with points, sign, class and labels", "[json]") {
    const Context c = mermin_pentagram().contexts.back();
    const json jc = to_json(c);
    CHECK(jc.at("sign") == -1);
    CHECK(jc.at("labels") == json::array({"XXX", "XYY", "YXY", "YYX"}));
    CHECK(context_from_json(jc) == c);
    CHECK(context_from_json(json::array({"XXX", "XYY", "YXY", "YYX"})) == c);
    json bad = jc;
    bad["sign"] = 1;
    CHECK_THROWS_AS(context_from_json(bad), Error);

    for (const FanoPlane &p : enumerate_planes()) {
        const json jp = to_json(p);
        CHECK(jp.at("class") == std::string(plane_class_name(p.plane_class)));
        CHECK(jp.at("labels").size() == 7);
        const FanoPlane back = plane_from_json(json::parse(jp.dump()));
        CHECK(back == p);
        CHECK(back.plane_class == p.plane_class);
        CHECK(back.sign == p.sign);
    }
}

TEST_CASE("atlas rows round-trip and mark N as derived", "[json][atlas]") {
    for (const AtlasRow &row : atlas().rows) {
        const json j = to_json(row);
        CHECK(j.at("N").at("derived") == true);
        CHECK(atlas_row_from_json(json::parse(j.dump())) == row);
    }
}

TEST_CASE("atlas CSV rows", "[csv][atlas]") {
    std::ostringstream out;
    write_atlas_csv(out, atlas().rows);
    std::istringstream in(out.str());
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    REQUIRE(lines.size() == 46);
    CHECK(lines[0] == "T,C-,O_A,O_B,O_C,F-,F+a,F+b,F+c,K,N");
    CHECK(lines[1] == "1,5,0,0,10,5,0,0,0,2,54");
    CHECK(lines[45] == "45,1,6,0,4,1,0,0,4,2,54");
}

TEST_CASE("golden CSV equals the embedded table", "[golden]") {
    std::ifstream in(source("golden/table1.csv"));
    REQUIRE(in);
    const GoldenTable file = read_golden_table(in);
    const GoldenTable embedded = table1();
    REQUIRE(file.size() == embedded.size());
    for (std::size_t r = 0; r < file.size(); ++r) {
        CHECK(file[r].t == embedded[r].t);
        CHECK(file[r].signature == embedded[r].signature);
        CHECK(file[r].k == embedded[r].k);
    }
}

TEST_CASE("golden table parser rejects malformed input", "[golden]") {
    auto parse = [](const std::string &text) {
        std::istringstream in(text);
        return read_golden_table(in);
    };
    CHECK_THROWS_AS(parse(""), Error);
    CHECK_THROWS_AS(parse("T,C-\n"), Error);
    CHECK_THROWS_AS(parse(std::string(kTable1CsvHeader) + "\n1,5,0,0,10,5,0,0,0\n"), Error);
    CHECK_THROWS_AS(parse(std::string(kTable1CsvHeader) + "\n1,5,0,0,10,5,0,0,0,x\n"), Error);
    CHECK_THROWS_AS(parse(std::string(kTable1CsvHeader) + "\n1,5,0,0,10,5,0,0,0,2,7\n"), Error);
    CHECK(parse(std::string(kTable1CsvHeader) + "\r\n1,5,0,0,10,5,0,0,0,2\r\n").size() == 1);
}

TEST_CASE("derived.json carries the same frozen data as derived.hpp", "[golden]") {
    const json j = json::parse(slurp(source("golden/derived.json")));
    CHECK(j.at("plane_classes").at("neg") == derived::kPlaneClassCensus[0]);
    CHECK(j.at("plane_classes").at("a") == derived::kPlaneClassCensus[1]);
    CHECK(j.at("plane_classes").at("b") == derived::kPlaneClassCensus[2]);
    CHECK(j.at("plane_classes").at("c") == derived::kPlaneClassCensus[3]);
    CHECK(j.at("context_signs").at("negative") == derived::kNegativeContexts);
    CHECK(j.at("context_signs").at("positive") == derived::kPositiveContexts);
    for (int t = 1; t <= 45; ++t) {
        CHECK(j.at("multiplicity").at(std::to_string(t)) == derived::kMultiplicity[static_cast<std::size_t>(t - 1)]);
        CHECK(j.at("klein_computed").at(std::to_string(t)) == derived::kComputedKlein[static_cast<std::size_t>(t - 1)]);
    }
}

TEST_CASE("cache write, hit, corruption and regeneration", "[cache]") {
    TempDir dir("pentagram-cache");
    const auto &all = all_pentagrams();

    CacheLoad first = load_or_enumerate(dir.path());
    CHECK(first.status == CacheStatus::Created);
    CHECK(first.pentagrams == all);

    const json meta = json::parse(slurp(dir.path() / kCacheMetaFile));
    CHECK(meta.at("count") == 12096);
    CHECK(meta.at("families").at("1") == 7884);
    CHECK(meta.at("families").at("3") == 4104);
    CHECK(meta.at("families").at("5") == 108);
    CHECK(meta.at("sha256") == sha256_hex(slurp(dir.path() / kCacheFile)));

    CacheLoad second = load_or_enumerate(dir.path());
    CHECK(second.status == CacheStatus::Hit);
    CHECK(second.pentagrams == all);

    SECTION("a flipped byte is a hash mismatch") {
        std::string body = slurp(dir.path() / kCacheFile);
        const auto pos = body.find("\"neg\":1");
        REQUIRE(pos != std::string::npos);
        body[pos + 6] = '3';
        std::ofstream(dir.path() / kCacheFile, std::ios::binary | std::ios::trunc) << body;
        CHECK_THROWS_AS(read_cache(dir.path()), Error);
        CacheLoad again = load_or_enumerate(dir.path());
        CHECK(again.status == CacheStatus::Regenerated);
        CHECK(again.reason.find("hash") != std::string::npos);
        CHECK(again.pentagrams == all);
        CHECK(read_cache(dir.path()) == all);
    }
    SECTION("a consistent but invalid record is rejected by validation") {
        // Rewrite the body with a forged record and a matching hash.
        std::string body = slurp(dir.path() / kCacheFile);
        const auto pos = body.find("\"neg\":1");
        body[pos + 6] = '3';
        std::ofstream(dir.path() / kCacheFile, std::ios::binary | std::ios::trunc) << body;
        json forged = meta;
        forged["sha256"] = sha256_hex(body);
        std::ofstream(dir.path() / kCacheMetaFile, std::ios::trunc) << forged.dump(2);
        CHECK_THROWS_AS(read_cache(dir.path()), Error);
        CHECK(load_or_enumerate(dir.path()).status == CacheStatus::Regenerated);
    }
    SECTION("missing metadata") {
        std::filesystem::remove(dir.path() / kCacheMetaFile);
        CacheLoad again = load_or_enumerate(dir.path());
        CHECK(again.status == CacheStatus::Regenerated);
        CHECK(std::filesystem::exists(dir.path() / kCacheMetaFile));
    }
}

TEST_CASE("cache bytes do not depend on the thread count", "[cache][determinism]") {
    TempDir one("pentagram-t1");
    TempDir many("pentagram-tn");
    write_cache(one.path(), enumerate_pentagrams({1}));
    write_cache(many.path(), enumerate_pentagrams({4}));
    CHECK(slurp(one.path() / kCacheFile) == slurp(many.path() / kCacheFile));
    CHECK(slurp(one.path() / kCacheMetaFile) == slurp(many.path() / kCacheMetaFile));
}
