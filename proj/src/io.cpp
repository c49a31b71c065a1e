#include "nfl/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nfl {

namespace {

using nlohmann::json;

std::size_t read_size(const json& doc, const char* field) {
    if (!doc.contains(field)) throw ParseError(std::string(field) + ": missing required field");
    const auto& v = doc.at(field);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
        throw ParseError(std::string(field) + ": expected a positive integer");
    return v.get<std::size_t>();
}

std::string index_path(const char* field, std::size_t i) {
    return std::string(field) + "[" + std::to_string(i) + "]";
}

std::string index_path(const char* field, std::size_t i, std::size_t j) {
    return index_path(field, i) + "[" + std::to_string(j) + "]";
}

std::string format_distance(double d) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
    return std::string(buf, end);
}

}  // namespace

FunctionSetFile parse_function_set(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    for (const auto& [key, _] : doc.items())
        if (key != "domain_size" && key != "codomain_size" && key != "functions" &&
            key != "neighborhood" && key != "metric")
            throw ParseError(key + ": unknown field");

    const std::size_t n = read_size(doc, "domain_size");
    const std::size_t m = read_size(doc, "codomain_size");
    const SpaceSignature sig(n, m);

    if (!doc.contains("functions")) throw ParseError("functions: missing required field");
    const auto& fs = doc.at("functions");
    if (!fs.is_array()) throw ParseError("functions: expected an array of value arrays");
    std::vector<FiniteFunction> members;
    members.reserve(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& row = fs[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError(index_path("functions", i) + ": expected an array of " +
                             std::to_string(n) + " values");
        std::vector<Value> values(n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = row[j];
            if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= m)
                throw ParseError(index_path("functions", i, j) + ": value " + v.dump() +
                                 " outside [0," + std::to_string(m) + ")");
            values[j] = v.get<Value>();
        }
        members.emplace_back(sig, std::move(values));
    }
    FunctionSetFile out{FunctionSet(sig, members), std::nullopt, std::nullopt, members};

    if (doc.contains("neighborhood")) {
        const auto& es = doc.at("neighborhood");
        if (!es.is_array()) throw ParseError("neighborhood: expected an edge list");
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < es.size(); ++i) {
            const auto& e = es[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
                !e[1].is_number_unsigned())
                throw ParseError(index_path("neighborhood", i) + ": expected [a, b]");
            const auto a = e[0].get<std::uint64_t>();
            const auto b = e[1].get<std::uint64_t>();
            if (a >= n || b >= n)
                throw ParseError(index_path("neighborhood", i) + ": point outside [0," +
                                 std::to_string(n) + ")");
            if (a == b)
                throw ParseError(index_path("neighborhood", i) + ": self-loop not allowed");
            edges.emplace_back(static_cast<Point>(a), static_cast<Point>(b));
        }
        out.neighborhood = Neighborhood::from_edges(n, edges);
    }

    if (doc.contains("metric")) {
        const auto& md = doc.at("metric");
        if (md.is_string()) {
            if (md.get<std::string>() != "absolute")
                throw ParseError("metric: unknown metric name " + md.dump());
            out.metric = ValueMetric::absolute_difference(m);
        } else if (md.is_array()) {
            std::vector<double> d;
            for (std::size_t i = 0; i < md.size(); ++i) {
                if (!md[i].is_number())
                    throw ParseError(index_path("metric", i) + ": expected a number");
                d.push_back(md[i].get<double>());
            }
            try {
                out.metric = ValueMetric::from_upper_triangle(m, d);
            } catch (const InvalidArgument& e) {
                throw ParseError(std::string("metric: ") + e.what());
            }
        } else {
            throw ParseError("metric: expected \"absolute\" or an array of distances");
        }
    }
    return out;
}

FunctionSetFile read_function_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_function_set(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string emit_function_set(const FunctionSetFile& doc) {
    const auto& sig = doc.functions.signature();
    std::ostringstream os;
    os << "{\n";
    os << "  \"domain_size\": " << sig.domain_size << ",\n";
    os << "  \"codomain_size\": " << sig.codomain_size << ",\n";
    os << "  \"functions\": [";
    const auto members = doc.functions.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        os << (i ? ",\n    [" : "\n    [");
        const auto values = members[i].values();
        for (std::size_t j = 0; j < values.size(); ++j) os << (j ? ", " : "") << values[j];
        os << ']';
    }
    os << (members.empty() ? "]" : "\n  ]");
    if (doc.neighborhood) {
        os << ",\n  \"neighborhood\": [";
        const auto edges = doc.neighborhood->edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            os << (i ? ", " : "") << '[' << edges[i].first << ", " << edges[i].second << ']';
        os << ']';
    }
    if (doc.metric) {
        os << ",\n  \"metric\": [";
        const auto d = doc.metric->upper_triangle();
        for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << format_distance(d[i]);
        os << ']';
    }
    os << "\n}\n";
    return os.str();
}

std::string format_log10(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

FractionRow to_row(const FractionCell& cell) {
    return {cell.signature.domain_size, cell.signature.codomain_size, cell.num_histograms,
            format_log10(cell.fraction.log10_value)};
}

std::string emit_fraction_csv(const std::vector<FractionRow>& rows) {
    std::string out(kFractionHeader);
    out += '\n';
    for (const auto& r : rows)
        out += std::to_string(r.x_size) + "," + std::to_string(r.y_size) + "," +
               r.num_histograms.str() + "," + r.log10_fraction + "\n";
    return out;
}

std::vector<FractionRow> parse_fraction_csv(std::string_view text) {
    std::vector<FractionRow> rows;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!header_seen) {
            if (line != kFractionHeader)
                throw ParseError("line 1: expected header " + std::string(kFractionHeader));
            header_seen = true;
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        for (std::size_t pos; (pos = line.find(',', start)) != std::string_view::npos; start = pos + 1)
            fields.push_back(line.substr(start, pos - start));
        fields.push_back(line.substr(start));
        if (fields.size() != 4)
            throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields");
        FractionRow row;
        auto parse_size = [&](std::string_view f, std::size_t& dst, const char* name) {
            auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), dst);
            if (ec != std::errc{} || p != f.data() + f.size())
                throw ParseError("line " + std::to_string(line_no) + ": bad " + name);
        };
        parse_size(fields[0], row.x_size, "x_size");
        parse_size(fields[1], row.y_size, "y_size");
        try {
            row.num_histograms = BigCount(std::string(fields[2]));
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad num_histograms");
        }
        row.log10_fraction = std::string(fields[3]);
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw ParseError("line 1: missing header");
    return rows;
}

}  // namespace nfl
