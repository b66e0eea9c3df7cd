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

// Process-wide fixtures: the full enumeration is computed once per test binary.

#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "pentagram/classifier.hpp"
#include "pentagram/enumerator.hpp"

namespace pentagram::testing {

inline const std::vector<Pentagram> &all_pentagrams() {
    static const std::vector<Pentagram> all = enumerate_pentagrams();
    return all;
}

inline const Atlas &atlas() {
    static const Atlas a = build_atlas(all_pentagrams());
    return a;
}

inline Observable obs(std::string_view label) {
    return Observable::parse(label);
}

inline Context ctx(std::string_view a, std::string_view b, std::string_view c, std::string_view d) {
    return make_context({obs(a), obs(b), obs(c), obs(d)});
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
   public:
    explicit TempDir(const std::string &stem) {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / (stem + "-" + std::to_string(rd()));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    const std::filesystem::path &path() const {
        return path_;
    }

   private:
    std::filesystem::path path_;
};

}  // namespace pentagram::testing
