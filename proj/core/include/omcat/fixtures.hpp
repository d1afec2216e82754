#ifndef OMCAT_FIXTURES_HPP
#define OMCAT_FIXTURES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omcat/mu_table.hpp"
#include "omcat/param_space.hpp"
#include "omcat/program.hpp"

namespace omcat {

struct CertifiedFact {
    std::string claim;
    std::string provenance;
    bool pass = false;
};

// A named instance with re-checkable facts. Program-backed fixtures carry a
// full program and its natural parameter space; table fixtures carry the
// basis <-> tope data alone.
struct Fixture {
    std::string name;
    std::string note;
    std::shared_ptr<Program> program;
    std::shared_ptr<MuTable> table; // from the program when present
    std::optional<ParameterSpace> param;

    // Re-runs every certified fact; fills the pass flags.
    std::vector<CertifiedFact> verify() const;
};

// Names: u1_2_line, figure1, efm8_mu_table, vamos_note, uniform(d,n).
Fixture fixture(const std::string& name, std::uint64_t seed = 1, ProgramOptions options = {});
std::vector<std::string> fixture_names();

// Seeded random realizable generic program with its parameter space; retries
// until the genericity checker passes.
struct RandomProgram {
    std::shared_ptr<Program> program;
    ParameterSpace param = ParameterSpace(RatMatrix());
    unsigned attempts = 0;
};
RandomProgram random_generic_program(unsigned d, unsigned n, std::uint64_t seed,
                                     bool require_uniform = false, ProgramOptions options = {});

} // namespace omcat

#endif
