#include "paco/store_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "paco/errors.hpp"

namespace paco {

namespace {

constexpr std::string_view kHeader = "paco-store v1";

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::size_t line, const char* what) {
  T value{};
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return value;
}

}  // namespace

std::string format_coord(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
  std::string s(buf, res.ptr);
  const std::size_t dot = s.find('.');
  if (dot == std::string::npos) {
    s += ".0000000";
  } else {
    const std::size_t frac = s.size() - dot - 1;
    if (frac < 7) s.append(7 - frac, '0');
  }
  return s;
}

std::string serialize_store(const StoreBackend& store) {
  std::vector<ContextPoint> pts = store.all_points();
  std::sort(pts.begin(), pts.end(),
            [](const ContextPoint& a, const ContextPoint& b) { return a.id < b.id; });
  std::string out(kHeader);
  out += '\n';
  for (const ContextPoint& p : pts) {
    out += std::to_string(p.id);
    out += ',';
    out += format_coord(p.x);
    out += ',';
    out += format_coord(p.y);
    out += ',';
    out += std::to_string(p.t);
    out += '\n';
  }
  return out;
}

void save_store(const StoreBackend& store, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f << serialize_store(store);
  if (!f) throw Error("write failed: " + path.string());
}

std::unique_ptr<StoreBackend> load_store(std::istream& in, BackendKind kind) {
  auto store = make_store(kind);
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw ParseError(1, "empty file, expected header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) throw ParseError(1, "bad header, expected '" + std::string(kHeader) + "'");

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line, ',');
    if (fields.size() != 4)
      throw ParseError(lineno, "expected 4 fields id,lon,lat,t, got " +
                                   std::to_string(fields.size()));
    ContextPoint p;
    p.id = parse_number<std::uint64_t>(fields[0], lineno, "id");
    p.x = parse_number<double>(fields[1], lineno, "lon");
    p.y = parse_number<double>(fields[2], lineno, "lat");
    p.t = parse_number<std::int64_t>(fields[3], lineno, "t");
    if (!valid_coord({p.x, p.y})) throw ParseError(lineno, "coordinate out of range");
    if (p.t < 0) throw ParseError(lineno, "negative timestamp");
    try {
      store->insert(p);
    } catch (const DuplicateIdError&) {
      throw ParseError(lineno, "duplicate id " + std::to_string(p.id));
    }
  }
  return store;
}

std::unique_ptr<StoreBackend> load_store(const std::filesystem::path& path, BackendKind kind) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string());
  return load_store(f, kind);
}

}  // namespace paco
