// Regenerates the bundled model files under data/models.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "r13lab/errors.hpp"
#include "r13lab/synthetic_models.hpp"

namespace {

const char* kTableProvenance =
    "k1, k2, k3, k4, k7, k10 from the published constraint table; remaining k and the m-table are a synthetic "
    "consistent fill";

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"write the bundled molecular model files"};
    std::string out = "data/models";
    app.add_option("--out", out, "target directory")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    using namespace r13;
    try {
        std::filesystem::create_directories(out);
        auto emit = [&](const std::string& file, const MolecularModel& m) {
            std::ofstream f(std::filesystem::path(out) / file, std::ios::binary);
            f << model_to_json(m);
            std::cout << "wrote " << file << "\n";
        };
        const SyntheticTargets t;
        emit("eta7.json", make_consistent_model("eta7", 7.0, false, published_k("7"), 1.0, 1.0, t, kTableProvenance));
        emit("eta10.json",
             make_consistent_model("eta10", 10.0, false, published_k("10"), 1.0, 1.0, t, kTableProvenance));
        emit("eta17.json",
             make_consistent_model("eta17", 17.0, false, published_k("17"), 1.0, 1.0, t, kTableProvenance));
        emit("etainf.json", make_consistent_model("etainf", std::nullopt, false, published_k("infinity"), 1.0, 1.0, t,
                                                  kTableProvenance));
        emit("maxwell.json", make_consistent_model("maxwell", 5.0, true, maxwell_k(), 1.0, 1.0,
                                                   SyntheticTargets::maxwell(),
                                                   "Maxwell-limit k; synthetic consistent m-table"));
        emit("synthetic_identity.json",
             make_consistent_model("synthetic_identity", 7.0, false, identity_test_k(), 1.0, 1.0, t,
                                   "well-conditioned synthetic coefficients for tests"));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }
    return 0;
}
