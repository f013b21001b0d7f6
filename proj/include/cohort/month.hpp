#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace cohort {

/// Calendar month ("YYYY-MM"). The only time unit the model knows about.
struct YearMonth {
  int year = 0;
  int month = 1;  // 1..12

  /// Strict parse of a zero-padded "YYYY-MM" string. Throws UnparseableMonth.
  static YearMonth parse(std::string_view text);
  static bool try_parse(std::string_view text, YearMonth& out);

  std::string str() const;

  friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

/// Signed month count `later - earlier`.
int months_between(YearMonth later, YearMonth earlier);

YearMonth add_months(YearMonth ym, int delta);

}  // namespace cohort
