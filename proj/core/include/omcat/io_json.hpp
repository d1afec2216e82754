#ifndef OMCAT_IO_JSON_HPP
#define OMCAT_IO_JSON_HPP

#include <string>

#include <json.hpp>

#include "omcat/laurent.hpp"
#include "omcat/matrix.hpp"
#include "omcat/mu_table.hpp"
#include "omcat/oriented_matroid.hpp"
#include "omcat/program.hpp"
#include "omcat/simplicial.hpp"

namespace omcat {

using Json = nlohmann::json;

// {"ground": ["1",...,"g","f"], "cocircuits": ["+0-...", ...],
//  "chirotope": {"123": "+"}} with one character per element, in order.
Json om_to_json(const OrientedMatroid& om);
OrientedMatroid om_from_json(const Json& j);

// om json plus {"g": label, "f": label}
Json program_to_json(const Program& p);
Program program_from_json(const Json& j, ProgramOptions options = {});

// [{"basis": [4,5,6], "tope": "+++---"}], 1-based element indices
Json mu_table_to_json(const MuTable& t);
MuTable mu_table_from_json(const Json& j);

// {"order": [...], "entries": [[{"min_degree": d, "coeffs": [c0, ...]}]]}
Json graded_matrix_to_json(const GradedMatrix& m);
std::string graded_matrix_csv(const GradedMatrix& m);

// {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
Json rat_matrix_to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const Json& j);
std::string rat_matrix_csv(const RatMatrix& m);

Json complex_to_json(const SimplicialComplex& k, const std::vector<std::string>& labels);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace omcat

#endif
