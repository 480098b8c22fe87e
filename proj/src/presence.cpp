#include "coocc/presence.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "coocc/error.hpp"

namespace coocc {

namespace {

void require_unique(const std::vector<std::string>& ids, const char* axis) {
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (id.empty()) {
      throw Error(ErrorCode::InvalidShape, std::string("empty ") + axis + " identifier");
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::InvalidShape,
                  std::string("duplicate ") + axis + " identifier '" + id + "'");
    }
  }
}

std::size_t find_id(const std::vector<std::string>& ids, std::string_view id,
                    const char* axis) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) {
    throw Error(ErrorCode::UnknownIdentifier,
                std::string("unknown ") + axis + " '" + std::string(id) + "'");
  }
  return static_cast<std::size_t>(it - ids.begin());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Ordered axis with first-appearance positions.
struct Axis {
  std::vector<std::string> ids;
  std::unordered_map<std::string, std::size_t> pos;

  std::size_t intern(std::string_view id) {
    auto [it, inserted] = pos.try_emplace(std::string(id), ids.size());
    if (inserted) ids.emplace_back(id);
    return it->second;
  }
};

}  // namespace

PresenceTensor::PresenceTensor(std::vector<std::string> entities,
                               std::vector<std::string> units,
                               std::vector<std::string> periods,
                               std::vector<Cell> cells)
    : entities_(std::move(entities)),
      units_(std::move(units)),
      periods_(std::move(periods)),
      cells_(std::move(cells)) {
  if (entities_.size() < 2 || units_.size() < 2 || periods_.empty()) {
    throw Error(ErrorCode::InvalidShape,
                "need at least 2 entities, 2 units and 1 period (got k=" +
                    std::to_string(entities_.size()) + " n=" +
                    std::to_string(units_.size()) + " l=" +
                    std::to_string(periods_.size()) + ")");
  }
  require_unique(entities_, "entity");
  require_unique(units_, "unit");
  require_unique(periods_, "period");
  if (cells_.size() != entities_.size() * units_.size() * periods_.size()) {
    throw Error(ErrorCode::InvalidShape, "cell count does not match k*n*l");
  }
  for (std::size_t e = 0; e < entities_.size(); ++e) {
    for (std::size_t p = 0; p < periods_.size(); ++p) {
      auto s = slice(e, p);
      if (std::all_of(s.begin(), s.end(), [](Cell c) { return c == Cell::Missing; })) {
        throw Error(ErrorCode::Unimputable, "entity '" + entities_[e] +
                                                "' has no observed cell in period '" +
                                                periods_[p] + "'");
      }
    }
  }
}

std::size_t PresenceTensor::missing_count() const noexcept {
  return static_cast<std::size_t>(
      std::count(cells_.begin(), cells_.end(), Cell::Missing));
}

std::size_t PresenceTensor::entity_index(std::string_view id) const {
  return find_id(entities_, id, "entity");
}
std::size_t PresenceTensor::unit_index(std::string_view id) const {
  return find_id(units_, id, "unit");
}
std::size_t PresenceTensor::period_index(std::string_view id) const {
  return find_id(periods_, id, "period");
}

PresenceTensor PresenceTensor::swap_roles() const {
  const std::size_t k = num_entities(), n = num_units(), l = num_periods();
  std::vector<Cell> swapped(cells_.size());
  for (std::size_t e = 0; e < k; ++e) {
    for (std::size_t p = 0; p < l; ++p) {
      for (std::size_t u = 0; u < n; ++u) {
        swapped[(u * l + p) * k + e] = at(e, u, p);
      }
    }
  }
  return PresenceTensor(units_, entities_, periods_, std::move(swapped));
}

PresenceTensor PresenceTensor::with_cells(std::vector<Cell> cells) const {
  return PresenceTensor(entities_, units_, periods_, std::move(cells));
}

PresenceTensor parse_presence_csv(std::string_view text) {
  std::size_t line_no = 0;
  bool header_seen = false;
  Axis entities, units, periods;
  struct Row {
    std::size_t e, u, p;
    Cell cell;
  };
  std::vector<Row> rows;

  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;

    std::string_view fields[4];
    std::size_t count = 0;
    while (true) {
      auto comma = line.find(',');
      if (count == 4) {
        throw Error(ErrorCode::MalformedCsv,
                    "line " + std::to_string(line_no) + ": expected 4 fields");
      }
      fields[count++] = trim(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (count != 4) {
      throw Error(ErrorCode::MalformedCsv,
                  "line " + std::to_string(line_no) + ": expected 4 fields");
    }

    if (!header_seen) {
      if (fields[0] != "entity" || fields[1] != "unit" || fields[2] != "period" ||
          fields[3] != "present") {
        throw Error(ErrorCode::MalformedCsv,
                    "header must be 'entity,unit,period,present'");
      }
      header_seen = true;
      continue;
    }

    for (int i = 0; i < 3; ++i) {
      if (fields[i].empty()) {
        throw Error(ErrorCode::MalformedCsv,
                    "line " + std::to_string(line_no) + ": empty identifier");
      }
    }
    Cell cell;
    if (fields[3] == "1") {
      cell = Cell::Present;
    } else if (fields[3] == "0") {
      cell = Cell::Absent;
    } else if (fields[3].empty()) {
      cell = Cell::Missing;
    } else {
      throw Error(ErrorCode::BadValue, "line " + std::to_string(line_no) +
                                           ": present must be 0, 1 or empty, got '" +
                                           std::string(fields[3]) + "'");
    }
    rows.push_back({entities.intern(fields[0]), units.intern(fields[1]),
                    periods.intern(fields[2]), cell});
  }
  if (!header_seen) throw Error(ErrorCode::MalformedCsv, "empty input");

  const std::size_t k = entities.ids.size(), n = units.ids.size(),
                    l = periods.ids.size();
  if (k < 2 || n < 2 || l < 1) {
    throw Error(ErrorCode::InvalidShape,
                "need at least 2 entities, 2 units and 1 period");
  }
  std::vector<Cell> cells(k * n * l, Cell::Missing);
  std::vector<std::uint8_t> filled(cells.size(), 0);
  for (const auto& r : rows) {
    const std::size_t idx = (r.e * l + r.p) * n + r.u;
    if (filled[idx]) {
      throw Error(ErrorCode::DuplicateCell, "duplicate row for (" + entities.ids[r.e] +
                                                "," + units.ids[r.u] + "," +
                                                periods.ids[r.p] + ")");
    }
    filled[idx] = 1;
    cells[idx] = r.cell;
  }
  if (auto it = std::find(filled.begin(), filled.end(), 0); it != filled.end()) {
    const auto idx = static_cast<std::size_t>(it - filled.begin());
    const std::size_t u = idx % n, p = (idx / n) % l, e = idx / (n * l);
    throw Error(ErrorCode::IncompleteGrid, "no row for (" + entities.ids[e] + "," +
                                               units.ids[u] + "," + periods.ids[p] +
                                               ")");
  }
  return PresenceTensor(std::move(entities.ids), std::move(units.ids),
                        std::move(periods.ids), std::move(cells));
}

PresenceTensor read_presence_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedCsv, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presence_csv(buf.str());
}

std::string to_csv(const PresenceTensor& t) {
  std::string out = "entity,unit,period,present\n";
  for (std::size_t p = 0; p < t.num_periods(); ++p) {
    for (std::size_t u = 0; u < t.num_units(); ++u) {
      for (std::size_t e = 0; e < t.num_entities(); ++e) {
        out += t.entities()[e];
        out += ',';
        out += t.units()[u];
        out += ',';
        out += t.periods()[p];
        out += ',';
        switch (t.at(e, u, p)) {
          case Cell::Present: out += '1'; break;
          case Cell::Absent: out += '0'; break;
          case Cell::Missing: break;
        }
        out += '\n';
      }
    }
  }
  return out;
}

CooccurrenceCounts cooccurrence_counts(const PresenceTensor& t, std::size_t a,
                                       std::size_t b, std::size_t period) {
  const auto sa = t.slice(a, period);
  const auto sb = t.slice(b, period);
  CooccurrenceCounts c;
  c.total = t.num_units();
  for (std::size_t u = 0; u < c.total; ++u) {
    if (sa[u] == Cell::Missing || sb[u] == Cell::Missing) {
      throw Error(ErrorCode::MissingData, "missing cells for entity pair ('" +
                                              t.entities()[a] + "','" +
                                              t.entities()[b] +
                                              "'); impute first");
    }
    const bool pa = sa[u] == Cell::Present, pb = sb[u] == Cell::Present;
    c.count_a += pa;
    c.count_b += pb;
    c.both += pa && pb;
  }
  return c;
}

PrevalenceSummary prevalence(const PresenceTensor& t) {
  PrevalenceSummary s;
  s.entities = t.num_entities();
  s.units = t.num_units();
  s.periods = t.num_periods();
  s.slices.resize(s.entities * s.periods);
  s.richness.assign(s.units * s.periods, 0);
  for (std::size_t e = 0; e < s.entities; ++e) {
    for (std::size_t p = 0; p < s.periods; ++p) {
      auto cells = t.slice(e, p);
      auto& sp = s.slices[e * s.periods + p];
      for (std::size_t u = 0; u < s.units; ++u) {
        if (cells[u] == Cell::Missing) continue;
        ++sp.observed;
        if (cells[u] == Cell::Present) {
          ++sp.present;
          ++s.richness[p * s.units + u];
        }
      }
    }
  }
  return s;
}

}  // namespace coocc
