#include "boolnet/network_io.hpp"

#include <zlib.h>

#include <charconv>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

namespace boolnet {

namespace {

using Kind = NetworkLoadError::Kind;

std::uint32_t crc_of(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks.
  while (!bytes.empty()) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(bytes.size(), 1u << 30));
    crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), chunk);
    bytes.remove_prefix(chunk);
  }
  return static_cast<std::uint32_t>(crc);
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(v[i]);
  }
  return s;
}

std::string metrics_line(const NetworkMetrics& m) {
  std::ostringstream os;
  os << "metrics cells=" << m.cells << " trie_nodes=" << m.trie_nodes
     << " build_ops=" << m.build_ops << " fast_path=" << m.fast_path_cells
     << " fallback=" << m.fallback_cells << " base=" << m.base_cells
     << " unresolved=" << m.unresolved_cells
     << " by_length=" << join(m.cells_by_length)
     << " unresolved_by_length=" << join(m.unresolved_by_length);
  return os.str();
}

[[noreturn]] void format_error(std::size_t line, const std::string& what) {
  throw NetworkLoadError(Kind::Format,
                         "network file line " + std::to_string(line) + ": " + what);
}

// Value of "key=value" in a whitespace-separated token, or nullopt.
std::optional<std::string_view> field(std::string_view token,
                                      std::string_view key) {
  if (token.size() <= key.size() || !token.starts_with(key) ||
      token[key.size()] != '=')
    return std::nullopt;
  return token.substr(key.size() + 1);
}

std::uint64_t number(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    format_error(line, "bad number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

void save_network(const Network& net, std::ostream& out) {
  if (net.aborted()) throw std::invalid_argument("cannot save an aborted network");
  std::string body = "BOOLNET v1 k=" + std::to_string(net.variable_count()) +
                     " n=" + std::to_string(net.frontier()) +
                     " policy=" + std::string(policy_name(net.policy())) + "\n";
  for (std::size_t i = 0; i < net.cell_count(); ++i) {
    const Cell& c = net.cell(i);
    body += to_text(net.expression(i));
    body.push_back(' ');
    body.push_back(status_symbol(c.status));
    body.push_back(' ');
    body += resolution_tag(c.resolved_by);
    body.push_back('\n');
  }
  body += metrics_line(net.metrics());
  body.push_back('\n');
  char crc[16];
  std::snprintf(crc, sizeof crc, "%08x", crc_of(body));
  out << body << "checksum crc32=" << crc << '\n';
}

Network load_network(std::istream& in) {
  const std::string data{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};

  // A file from another format version is reported as such before its
  // checksum is looked at.
  if (data.starts_with("BOOLNET ")) {
    const std::string_view rest = std::string_view(data).substr(8);
    const std::string_view version = rest.substr(0, rest.find_first_of(" \n"));
    if (version != "v1")
      throw NetworkLoadError(Kind::Version,
                             "unsupported network version " + std::string(version));
  }

  // The checksum line must be the last line of the file.
  std::string_view all = data;
  if (all.ends_with('\n')) all.remove_suffix(1);
  const std::size_t last_nl = all.rfind('\n');
  const std::string_view last =
      last_nl == std::string_view::npos ? all : all.substr(last_nl + 1);
  const auto stored = last.starts_with("checksum ")
                          ? field(last.substr(9), "crc32")
                          : std::nullopt;
  if (!stored || last_nl == std::string_view::npos)
    throw NetworkLoadError(Kind::Checksum, "missing checksum line (truncated file?)");
  const std::string_view body = all.substr(0, last_nl + 1);
  char expect[16];
  std::snprintf(expect, sizeof expect, "%08x", crc_of(body));
  if (*stored != expect)
    throw NetworkLoadError(Kind::Checksum, "checksum mismatch: stored " +
                                               std::string(*stored) +
                                               ", computed " + expect);

  std::vector<std::string_view> lines = split(body.substr(0, body.size() - 1), '\n');
  if (lines.size() < 2) format_error(1, "missing header or metrics");

  // Header.
  const auto header = split(lines.front(), ' ');
  if (header.size() != 5 || header[0] != "BOOLNET")
    format_error(1, "not a network file");
  if (header[1] != "v1")
    throw NetworkLoadError(Kind::Version,
                           "unsupported network version " + std::string(header[1]));
  const auto k = field(header[2], "k");
  const auto n = field(header[3], "n");
  const auto p = field(header[4], "policy");
  if (!k || !n || !p) format_error(1, "malformed header");
  const auto policy = policy_from_name(*p);
  if (!policy) format_error(1, "unknown policy '" + std::string(*p) + "'");

  BuildOptions options;
  options.policy = *policy;
  options.node_budget = static_cast<std::size_t>(-1);
  const auto variable_count = static_cast<VarIndex>(number(*k, 1));
  const auto frontier = static_cast<std::size_t>(number(*n, 1));
  if (variable_count < 1 || frontier < 2) format_error(1, "k or n out of range");

  Network net = detail::NetworkAccess::make(variable_count, frontier, options);
  NetworkMetrics& m = detail::NetworkAccess::metrics(net);

  // Records.
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    const auto parts = split(lines[i], ' ');
    if (parts.size() != 3 || parts[1].size() != 1)
      format_error(i + 1, "malformed record");
    const auto status = status_from_symbol(parts[1][0]);
    const auto tag = resolution_from_tag(parts[2]);
    if (!status || !tag) format_error(i + 1, "bad status or resolution tag");
    SymbolString s;
    try {
      s = to_symbols(parts[0]);
      parse_symbols(s);
    } catch (const ParseError& e) {
      format_error(i + 1, e.what());
    }
    if (s.size() > frontier) format_error(i + 1, "expression beyond n");
    try {
      detail::commit_cell(net, s, {Cell{*status, *tag}, 0});
    } catch (const std::logic_error& e) {
      format_error(i + 1, e.what());
    }
  }

  // Footer: build_ops is taken from the file; everything else must agree.
  const std::size_t footer_line = lines.size();
  const auto footer = split(lines.back(), ' ');
  if (footer.size() != 10 || footer[0] != "metrics")
    format_error(footer_line, "malformed metrics line");
  const auto ops = field(footer[3], "build_ops");
  if (!ops) format_error(footer_line, "missing build_ops");
  m.build_ops = number(*ops, footer_line);
  if (metrics_line(m) != lines.back())
    format_error(footer_line, "stored metrics disagree with the records");

  detail::NetworkAccess::set_frontier(net, frontier);
  return net;
}

}  // namespace boolnet
