#include "omcat/io_json.hpp"

#include <fstream>

namespace omcat {

namespace {

bool all_single_char(const std::vector<std::string>& labels) {
    for (const auto& l : labels)
        if (l.size() != 1) return false;
    return true;
}

std::string subset_key(std::uint64_t mask, const std::vector<std::string>& labels) {
    std::string key;
    bool single = all_single_char(labels);
    bool first = true;
    for (unsigned i = 0; i < labels.size(); ++i)
        if (mask & (std::uint64_t(1) << i)) {
            if (!single && !first) key += ",";
            key += labels[i];
            first = false;
        }
    return key;
}

std::uint64_t parse_subset_key(const std::string& key, const std::vector<std::string>& labels) {
    std::uint64_t mask = 0;
    auto index_of = [&](const std::string& lab) -> unsigned {
        for (unsigned i = 0; i < labels.size(); ++i)
            if (labels[i] == lab) return i;
        throw DomainError("parse", "unknown element '" + lab + "' in chirotope key");
    };
    if (all_single_char(labels)) {
        for (char c : key) mask |= std::uint64_t(1) << index_of(std::string(1, c));
    } else {
        std::size_t start = 0;
        while (start < key.size()) {
            std::size_t comma = key.find(',', start);
            if (comma == std::string::npos) comma = key.size();
            mask |= std::uint64_t(1) << index_of(key.substr(start, comma - start));
            start = comma + 1;
        }
    }
    return mask;
}

} // namespace

Json om_to_json(const OrientedMatroid& om) {
    Json j;
    j["ground"] = om.ground();
    std::vector<std::string> cocircuits;
    for (const auto& y : om.cocircuits()) cocircuits.push_back(y.str());
    j["cocircuits"] = cocircuits;
    if (om.chirotope()) {
        Json chi = Json::object();
        for (const auto& [basis, sign] : *om.chirotope())
            chi[subset_key(basis, om.ground())] = sign > 0 ? "+" : (sign < 0 ? "-" : "0");
        j["chirotope"] = chi;
    }
    return j;
}

OrientedMatroid om_from_json(const Json& j) {
    if (!j.contains("ground") || !j.contains("cocircuits"))
        throw DomainError("parse", "oriented matroid JSON needs 'ground' and 'cocircuits'");
    std::vector<std::string> labels = j.at("ground").get<std::vector<std::string>>();
    std::vector<SignVector> cocircuits;
    for (const auto& s : j.at("cocircuits")) {
        SignVector y = SignVector::parse(s.get<std::string>());
        if (y.size() != labels.size())
            throw DomainError("parse", "cocircuit length differs from the ground set");
        cocircuits.push_back(y);
    }
    OrientedMatroid om(labels, std::move(cocircuits));
    if (j.contains("chirotope")) {
        Chirotope chi;
        for (const auto& [key, val] : j.at("chirotope").items()) {
            std::string v = val.get<std::string>();
            int s = v == "+" ? 1 : (v == "-" ? -1 : 0);
            chi[parse_subset_key(key, labels)] = s;
        }
        om.attach_chirotope(std::move(chi));
    }
    return om;
}

Json program_to_json(const Program& p) {
    Json j = om_to_json(p.mtilde());
    j["g"] = p.ground_labels()[p.n()];
    j["f"] = p.ground_labels()[p.n() + 1];
    return j;
}

Program program_from_json(const Json& j, ProgramOptions options) {
    if (!j.contains("g") || !j.contains("f"))
        throw DomainError("parse", "program JSON needs 'g' and 'f' labels");
    OrientedMatroid om = om_from_json(j);
    return Program(om, j.at("g").get<std::string>(), j.at("f").get<std::string>(), options);
}

Json mu_table_to_json(const MuTable& t) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        Json row;
        std::vector<unsigned> basis;
        for (unsigned e = 0; e < t.n(); ++e)
            if (t.bases()[i] & (std::uint64_t(1) << e)) basis.push_back(e + 1);
        row["basis"] = basis;
        row["tope"] = t.topes()[i].str();
        rows.push_back(row);
    }
    return rows;
}

MuTable mu_table_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw DomainError("parse", "mu table JSON must be a list");
    std::vector<std::pair<std::uint64_t, SignVector>> rows;
    unsigned n = 0;
    for (const auto& row : j) {
        SignVector tope = SignVector::parse(row.at("tope").get<std::string>());
        n = tope.size();
        std::uint64_t mask = 0;
        for (unsigned e : row.at("basis").get<std::vector<unsigned>>()) {
            if (e < 1 || e > tope.size())
                throw DomainError("parse", "basis element out of range in mu table");
            mask |= std::uint64_t(1) << (e - 1);
        }
        rows.emplace_back(mask, tope);
    }
    return MuTable(n, std::move(rows));
}

Json graded_matrix_to_json(const GradedMatrix& m) {
    Json j;
    std::vector<std::string> order;
    for (const auto& t : m.order()) order.push_back(t.str());
    j["order"] = order;
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.size(); ++c) {
            const Laurent& p = m.at(r, c);
            Json cell;
            cell["min_degree"] = p.is_zero() ? 0 : p.min_degree();
            cell["coeffs"] = p.coeffs();
            row.push_back(cell);
        }
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

std::string graded_matrix_csv(const GradedMatrix& m) {
    std::string out = "tope";
    for (const auto& t : m.order()) out += "," + t.str();
    out += "\n";
    for (std::size_t r = 0; r < m.size(); ++r) {
        out += m.order()[r].str();
        for (std::size_t c = 0; c < m.size(); ++c) out += "," + m.at(r, c).str();
        out += "\n";
    }
    return out;
}

Json rat_matrix_to_json(const RatMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

RatMatrix rat_matrix_from_json(const Json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    RatMatrix m(rows, cols);
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw DomainError("parse", "matrix row count mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols) throw DomainError("parse", "matrix column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& cell = entries[r][c];
            m.at(r, c) = cell.is_string() ? rat_parse(cell.get<std::string>())
                                          : Rat(cell.get<long>());
        }
    }
    return m;
}

std::string rat_matrix_csv(const RatMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ",";
            out += rat_str(m.at(r, c));
        }
        out += "\n";
    }
    return out;
}

Json complex_to_json(const SimplicialComplex& k, const std::vector<std::string>& labels) {
    Json j;
    j["void"] = k.is_void();
    Json facets = Json::array();
    for (std::uint64_t f : k.facets()) {
        std::vector<std::string> facet;
        for (unsigned i = 0; i < k.ground_size(); ++i)
            if (f & (std::uint64_t(1) << i)) facet.push_back(labels[i]);
        facets.push_back(facet);
    }
    j["facets"] = facets;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("io", "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw DomainError("parse", "malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw DomainError("io", "cannot write " + path);
    out << content;
}

} // namespace omcat
