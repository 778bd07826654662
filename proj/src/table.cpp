#include "faqai/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "faqai/errors.hpp"

namespace faqai {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            return fields;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

bool blank(std::string_view line) { return trim(line).empty(); }

}

Table::Table(std::string name, std::vector<std::string> schema, std::vector<double> cells)
    : name_(std::move(name))
    , schema_(std::move(schema))
    , cells_(std::move(cells))
{
    if (schema_.empty())
        throw ParseError("table '" + name_ + "' has no features");
    std::set<std::string_view> seen;
    for (const auto &f : schema_) {
        if (f.empty())
            throw ParseError("table '" + name_ + "' has an empty feature name");
        if (!seen.insert(f).second)
            throw ParseError("table '" + name_ + "': duplicate feature name '" + f + "'");
    }
    if (cells_.size() % schema_.size() != 0)
        throw ParseError("table '" + name_ + "': ragged cell buffer");
    for (double v : cells_)
        if (!std::isfinite(v))
            throw ParseError("table '" + name_ + "': non-finite cell");
}

std::optional<std::size_t> Table::column_of(std::string_view feature) const
{
    for (std::size_t c = 0; c < schema_.size(); ++c)
        if (schema_[c] == feature)
            return c;
    return std::nullopt;
}

Table load_table(std::istream &source, std::string name, bool header)
{
    std::vector<std::string> schema;
    std::vector<double> cells;
    std::string line;
    std::size_t data_row = 0;
    bool have_schema = false;

    while (std::getline(source, line)) {
        if (blank(line))
            continue;
        auto fields = split(line);
        if (!have_schema) {
            have_schema = true;
            if (header) {
                for (auto f : fields)
                    schema.emplace_back(f);
                continue;
            }
            for (std::size_t c = 0; c < fields.size(); ++c)
                schema.push_back(name + "." + std::to_string(c + 1));
        }
        ++data_row;
        if (fields.size() != schema.size())
            throw ParseError("table '" + name + "': ragged row " + std::to_string(data_row) + " (" +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(schema.size()) + ")");
        for (std::size_t c = 0; c < fields.size(); ++c) {
            auto f = fields[c];
            if (!f.empty() && f.front() == '+')
                f.remove_prefix(1);
            double v = 0;
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v))
                throw ParseError("table '" + name + "': non-numeric cell at row " + std::to_string(data_row) +
                                 " col " + schema[c] + ": '" + std::string(fields[c]) + "'");
            cells.push_back(v);
        }
    }
    if (!have_schema)
        throw ParseError("table '" + name + "': missing header");
    return Table(std::move(name), std::move(schema), std::move(cells));
}

Table load_table_file(const std::filesystem::path &path, bool header)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    return load_table(in, path.stem().string(), header);
}

void write_csv(std::ostream &out, const Table &table)
{
    auto schema = table.schema();
    for (std::size_t c = 0; c < schema.size(); ++c)
        out << (c ? "," : "") << schema[c];
    out << '\n';
    char buf[64];
    for (std::size_t r = 0; r < table.num_rows(); ++r) {
        auto row = table.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, row[c]);
            (void) ec;
            if (c)
                out << ',';
            out.write(buf, ptr - buf);
        }
        out << '\n';
    }
}

Database::Database(std::vector<Table> tables)
    : tables_(std::move(tables))
{
    if (tables_.empty())
        throw std::invalid_argument("a database needs at least one table");
    std::unordered_map<std::string, std::size_t> ids;
    column_features_.resize(tables_.size());
    for (std::size_t t = 0; t < tables_.size(); ++t) {
        for (const auto &f : tables_[t].schema()) {
            auto [it, fresh] = ids.emplace(f, features_.size());
            if (fresh) {
                features_.push_back(f);
                tables_with_.emplace_back();
            }
            column_features_[t].push_back(it->second);
            tables_with_[it->second].push_back(t);
        }
    }
}

std::optional<std::size_t> Database::feature_id(std::string_view name) const
{
    auto it = std::find(features_.begin(), features_.end(), name);
    if (it == features_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - features_.begin());
}

DatabaseStats Database::stats() const
{
    DatabaseStats s;
    s.m = tables_.size();
    for (const auto &t : tables_)
        s.n = std::max(s.n, t.num_rows());
    s.d = features_.size();
    return s;
}

std::vector<double> active_domain(const Database &db, std::string_view feature)
{
    auto id = db.feature_id(feature);
    if (!id)
        throw UnknownName("unknown feature '" + std::string(feature) + "'");
    std::vector<double> values;
    for (std::size_t t : db.tables_with(*id)) {
        const auto &table = db.table(t);
        std::size_t c = *table.column_of(feature);
        for (std::size_t r = 0; r < table.num_rows(); ++r)
            values.push_back(table.at(r, c));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

Database load_database(const std::vector<std::filesystem::path> &sources, bool header)
{
    std::vector<std::filesystem::path> files;
    for (const auto &src : sources) {
        if (std::filesystem::is_directory(src)) {
            std::vector<std::filesystem::path> found;
            for (const auto &entry : std::filesystem::directory_iterator(src))
                if (entry.is_regular_file() && entry.path().extension() == ".csv")
                    found.push_back(entry.path());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(src);
        }
    }
    if (files.empty())
        throw ParseError("no tables found");
    std::vector<Table> tables;
    for (const auto &f : files)
        tables.push_back(load_table_file(f, header));
    return Database(std::move(tables));
}

}
