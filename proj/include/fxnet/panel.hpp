#ifndef FXNET_PANEL_HPP
#define FXNET_PANEL_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "fxnet/date.hpp"
#include "fxnet/matrix.hpp"

namespace fxnet {

/// Column-mapping description of a delimited rate table.
struct PanelSchema {
    std::string date_column = "date";
    std::string date_format = "%Y-%m-%d";
    char delimiter = ',';
    std::string missing_token = "NA";
    std::string reference; // quote currency of the file, e.g. USD

    void validate() const; // throws Error(Schema)
};

PanelSchema load_schema(std::istream& in);
PanelSchema load_schema_file(const std::string& path);

/// Date-indexed table of positive exchange rates quoted against one
/// reference currency: rates(i, c) = units of currency c per 1 unit of
/// the reference on date i. Cells may be NaN (missing) after parsing;
/// align_calendar produces a dense panel.
struct RatePanel {
    std::string reference;
    std::vector<Date> dates;
    std::vector<std::string> currencies;
    Matrix rates; // dates x currencies

    std::size_t currency_index(const std::string& code) const; // throws UnknownCurrency
    bool has_missing() const;
};

/// Same table rebased so that every column is expressed in units of
/// `base`: values are units of currency X per 1 unit of base.
struct CrossRatePanel {
    std::string base;
    std::vector<Date> dates;
    std::vector<std::string> currencies; // all panel currencies + reference, minus base
    Matrix rates;
};

enum class MissingMode { DropDate, ForwardFill, Error };

struct MissingPolicy {
    MissingMode mode = MissingMode::DropDate;
    int max_fill_run = 0; // forward-fill only
};

struct AlignReport {
    std::size_t dates_dropped = 0;
    std::size_t cells_filled = 0;
};

struct AlignedPanel {
    RatePanel panel;
    AlignReport report;
};

/// Parse a delimited rate table. Dates are sorted ascending; duplicate
/// dates and malformed cells are rejected with the offending line number.
/// Missing cells (the schema token or an empty field) come back as NaN.
RatePanel parse_rate_panel(std::istream& in, const PanelSchema& schema);

/// Resolve missing cells according to `policy` and return a dense panel
/// together with dropped/filled counts.
AlignedPanel align_calendar(const RatePanel& panel, const MissingPolicy& policy);

/// Re-express the panel in units of `base` via the triangle relation
/// G_X^base = G_X^ref / G_base^ref. `base` may be the reference itself.
CrossRatePanel rebase(const RatePanel& panel, const std::string& base);

/// Debug/round-trip serialization: header plus one ISO-dated row per line,
/// rates rendered with shortest round-trip precision.
void write_panel_csv(const RatePanel& panel, std::ostream& out);

} // namespace fxnet

#endif
