#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace faqai {

/// A named relational table of finite reals, stored row-major. Duplicate rows are kept (bag semantics).
class Table
{
  public:
    Table() = default;
    /// Validates the schema (non-empty, unique names) and the cells (finite, width-aligned).
    Table(std::string name, std::vector<std::string> schema, std::vector<double> cells);

    const std::string & name() const { return name_; }
    std::span<const std::string> schema() const { return schema_; }
    std::size_t width() const { return schema_.size(); }
    std::size_t num_rows() const { return width() == 0 ? 0 : cells_.size() / width(); }

    std::span<const double> row(std::size_t r) const { return {cells_.data() + r * width(), width()}; }
    double at(std::size_t r, std::size_t c) const { return cells_[r * width() + c]; }

    std::optional<std::size_t> column_of(std::string_view feature) const;

    friend bool operator==(const Table &, const Table &) = default;

  private:
    std::string name_;
    std::vector<std::string> schema_;
    std::vector<double> cells_;
};

/// Parses comma-separated numeric records. With `header`, the first record names the features;
/// otherwise columns are named `<name>.1`, `<name>.2`, ...
Table load_table(std::istream &source, std::string name, bool header = true);
Table load_table_file(const std::filesystem::path &path, bool header = true);

/// Writes the table as CSV with a header row; reals are printed round-trip exact.
void write_csv(std::ostream &out, const Table &table);

struct DatabaseStats
{
    std::size_t m = 0; ///< number of tables
    std::size_t n = 0; ///< maximum row count of any table
    std::size_t d = 0; ///< number of distinct features

    friend bool operator==(const DatabaseStats &, const DatabaseStats &) = default;
};

/// An ordered collection of tables. Features with the same name in different tables are join attributes.
///
/// Features are numbered in canonical order: first appearance scanning tables in order and columns left
/// to right.
class Database
{
  public:
    explicit Database(std::vector<Table> tables);

    std::size_t size() const { return tables_.size(); }
    std::span<const Table> tables() const { return tables_; }
    const Table & table(std::size_t i) const { return tables_[i]; }

    std::span<const std::string> features() const { return features_; }
    std::optional<std::size_t> feature_id(std::string_view name) const;
    /// Indices of the tables containing the feature, ascending.
    std::span<const std::size_t> tables_with(std::size_t feature) const { return tables_with_[feature]; }
    /// Global feature id of every column of table `t`.
    std::span<const std::size_t> column_features(std::size_t t) const { return column_features_[t]; }

    DatabaseStats stats() const;

  private:
    std::vector<Table> tables_;
    std::vector<std::string> features_;
    std::vector<std::vector<std::size_t>> tables_with_;
    std::vector<std::vector<std::size_t>> column_features_;
};

inline DatabaseStats stats(const Database &db) { return db.stats(); }

/// Sorted distinct values of `feature` across every table containing it. Throws UnknownName.
std::vector<double> active_domain(const Database &db, std::string_view feature);

/// Loads every `.csv` under each directory (sorted by file name) or each listed file; tables are named
/// by file stem.
Database load_database(const std::vector<std::filesystem::path> &sources, bool header = true);

}
