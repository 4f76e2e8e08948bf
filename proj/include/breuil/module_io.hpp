#pragma once

// Text formats.
//
//   bmod 1                          bmor 1
//   p <p> m <m> d <d> N <N>         p <p> m <m> d <d> N <N>
//   hbar <series>                   shape <rows> <cols>
//   rank <r>                        <rows> lines of <cols> ';'-separated series
//   r lines of r ';'-separated series (A)
//   [cert f <series>
//    r lines of B]
//
// Blank lines and lines starting with '#' are ignored. The field for m > 1 uses
// the default modulus.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "breuil/breuil_module.hpp"
#include "breuil/series_io.hpp"

namespace breuil {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) {
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      lines_.push_back({no, line.substr(first)});
    }
  }

  bool done() const noexcept { return pos_ >= lines_.size(); }
  int line_number() const noexcept { return done() ? (lines_.empty() ? 0 : lines_.back().first) : lines_[pos_].first; }

  const std::string& next(const char* what) {
    if (done()) fail(std::string("missing ") + what);
    return lines_[pos_++].second;
  }
  std::string peek() const { return done() ? std::string() : lines_[pos_].second; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::FormatError, "line " + std::to_string(line_number()) + ": " + what);
  }

 private:
  std::vector<std::pair<int, std::string>> lines_;
  std::size_t pos_ = 0;
};

inline std::vector<std::string> split_entries(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline RingContext read_header(LineReader& r, const std::string& magic) {
  std::istringstream h(r.next("header"));
  std::string word;
  int version = 0;
  if (!(h >> word >> version) || word != magic || version != 1) r.fail("expected '" + magic + " 1'");
  std::istringstream s(r.next("ring line"));
  std::string kp, km, kd, kn;
  long long p = 0, m = 0, d = 0, N = 0;
  if (!(s >> kp >> p >> km >> m >> kd >> d >> kn >> N) || kp != "p" || km != "m" || kd != "d" || kn != "N")
    r.fail("expected 'p <int> m <int> d <int> N <int>'");
  if (p < 2 || p > 65536 || m < 1 || m > 16) r.fail("field parameters out of range");
  return RingContext(make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m)), static_cast<int>(d),
                     static_cast<int>(N));
}

inline SeriesMatrix read_rows(LineReader& r, const RingContext& ctx, int rows, int cols) {
  SeriesMatrix M(ctx, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto entries = split_entries(r.next("matrix row"));
    if (static_cast<int>(entries.size()) != cols)
      r.fail("row " + std::to_string(i + 1) + " has " + std::to_string(entries.size()) + " entries, expected " +
             std::to_string(cols));
    for (int j = 0; j < cols; ++j) M(i, j) = parse_series(entries[j], ctx);
  }
  return M;
}

inline std::string keyword_value(LineReader& r, const std::string& key) {
  const auto& line = r.next(key.c_str());
  if (line.rfind(key + " ", 0) != 0) r.fail("expected '" + key + " ...'");
  return line.substr(key.size() + 1);
}

inline int parse_count(LineReader& r, const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size() || v < 0 || v > 64) r.fail("bad count '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    r.fail("bad count '" + text + "'");
  }
}

inline void write_rows(std::ostream& out, const SeriesMatrix& M) {
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) out << (j ? "; " : "") << to_string(M(i, j));
    out << "\n";
  }
}

inline void write_header(std::ostream& out, const std::string& magic, const RingContext& ctx) {
  out << magic << " 1\n";
  out << "p " << ctx.p() << " m " << ctx.k().degree() << " d " << ctx.d << " N " << ctx.N << "\n";
}

}  // namespace detail

inline BreuilModP read_module(std::istream& in) {
  detail::LineReader r(in);
  BreuilModP M;
  M.ctx = detail::read_header(r, "bmod");
  M.hbar = parse_series(detail::keyword_value(r, "hbar"), M.ctx);
  const int rank = detail::parse_count(r, detail::keyword_value(r, "rank"));
  M.A = detail::read_rows(r, M.ctx, rank, rank);
  if (!r.done()) {
    const auto f = parse_series(detail::keyword_value(r, "cert f"), M.ctx);
    M.cert = Certificate{detail::read_rows(r, M.ctx, rank, rank), f};
  }
  if (!r.done()) r.fail("unexpected trailing content");
  return M;
}

inline std::string write_module(const BreuilModP& M) {
  std::ostringstream out;
  detail::write_header(out, "bmod", M.ctx);
  out << "hbar " << to_string(M.hbar) << "\n";
  out << "rank " << M.rank() << "\n";
  detail::write_rows(out, M.A);
  if (M.cert) {
    out << "cert f " << to_string(M.cert->f) << "\n";
    detail::write_rows(out, M.cert->B);
  }
  return out.str();
}

inline SeriesMatrix read_morphism(std::istream& in) {
  detail::LineReader r(in);
  const auto ctx = detail::read_header(r, "bmor");
  std::istringstream s(detail::keyword_value(r, "shape"));
  int rows = -1, cols = -1;
  if (!(s >> rows >> cols) || rows < 0 || cols < 0 || rows > 64 || cols > 64) r.fail("expected 'shape <rows> <cols>'");
  auto U = detail::read_rows(r, ctx, rows, cols);
  if (!r.done()) r.fail("unexpected trailing content");
  return U;
}

inline std::string write_morphism(const SeriesMatrix& U) {
  std::ostringstream out;
  detail::write_header(out, "bmor", U.ctx());
  out << "shape " << U.rows() << " " << U.cols() << "\n";
  detail::write_rows(out, U);
  return out.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::InvalidInput, "failed writing '" + path + "'");
}

inline BreuilModP load_module(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return read_module(in);
}

inline SeriesMatrix load_morphism(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return read_morphism(in);
}

}  // namespace breuil
