#include "kostka/formats.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "kostka/text_format.hpp"

namespace kostka {

std::string matrix_to_csv(const KostkaMatrix& m) {
    std::ostringstream os;
    os << "\"lambda\\mu\"";
    for (const auto& p : m.order)
        os << ",\"" << to_text(p) << '"';
    os << '\n';
    for (std::size_t r = 0; r < m.dimension(); ++r) {
        os << '"' << to_text(m.order[r]) << '"';
        for (const auto& v : m.values[r])
            os << ',' << to_decimal(v);
        os << '\n';
    }
    return os.str();
}

std::string matrix_to_json(const KostkaMatrix& m) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : m.order)
        parts.push_back(to_text(p));
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m.values) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row)
            r.push_back(to_decimal(v));
        rows.push_back(std::move(r));
    }
    nlohmann::json doc{{"n", m.n}, {"partitions", std::move(parts)}, {"matrix", std::move(rows)}};
    return doc.dump() + "\n";
}

std::string matrix_to_text(const KostkaMatrix& m) {
    std::vector<std::string> labels;
    std::size_t label_width = 0, cell_width = 1;
    for (const auto& p : m.order) {
        std::ostringstream os;
        os << p;
        labels.push_back(os.str());
        label_width = std::max(label_width, labels.back().size());
    }
    for (const auto& row : m.values)
        for (const auto& v : row)
            cell_width = std::max(cell_width, to_decimal(v).size());
    std::ostringstream os;
    for (std::size_t r = 0; r < m.dimension(); ++r) {
        os << std::left << std::setw(static_cast<int>(label_width)) << labels[r] << std::right;
        for (const auto& v : m.values[r])
            os << ' ' << std::setw(static_cast<int>(cell_width)) << to_decimal(v);
        os << '\n';
    }
    return os.str();
}

} // namespace kostka
