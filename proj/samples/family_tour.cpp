/*
   Copyright 2026 The lagengel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Walks the six families: prints each coframe document, its obstructions
// and the compact quotient verdict. With a directory argument the
// documents are also written there as family<N>.cf.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "lagengel/lagengel.hpp"

int main(int argc, char** argv) {
    using namespace lagengel;
    const std::filesystem::path out_dir = argc > 1 ? argv[1] : "";
    for (auto id : all_families()) {
        const auto alg = build_family(id);
        const auto text = emit_coframe(alg);
        std::cout << "# " << id.str() << "\n" << text;
        const auto verdict = compact_quotient_verdict(id, Poly::symbol("a"), Poly::symbol("b"));
        for (const auto& line : verdict.justification) std::cout << "#   " << line << "\n";
        std::cout << "\n";
        if (!out_dir.empty()) {
            std::ofstream f(out_dir / ("family" + std::to_string(id.index()) + ".cf"));
            f << "# " << id.str() << "\n" << text;
        }
    }
    return 0;
}
