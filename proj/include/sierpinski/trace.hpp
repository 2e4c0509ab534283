#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "encoding.hpp"
#include "errors.hpp"
#include "forest.hpp"

namespace sierpinski {

/// One line of an operation trace: `U <j> <delta>` or `P <j> <i|e>`.
struct TraceOp {
  enum class Kind { update, prefix };
  Kind kind = Kind::update;
  std::size_t index = 0;
  std::int64_t delta = 0;
  Boundary boundary = Boundary::inclusive;
};

/// Blank lines and lines starting with '#' are skipped.
inline std::vector<TraceOp> parse_trace(std::istream& in) {
  std::vector<TraceOp> ops;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == '#') continue;
    auto fail = [&] {
      return FormatError("trace line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    };
    TraceOp op;
    long long index = -1;
    if (!(fields >> index) || index < 0) throw fail();
    op.index = static_cast<std::size_t>(index);
    if (tag == "U") {
      op.kind = TraceOp::Kind::update;
      if (!(fields >> op.delta)) throw fail();
    } else if (tag == "P") {
      op.kind = TraceOp::Kind::prefix;
      std::string b;
      if (!(fields >> b) || (b != "i" && b != "e")) throw fail();
      op.boundary = b == "i" ? Boundary::inclusive : Boundary::exclusive;
    } else {
      throw fail();
    }
    std::string extra;
    if (fields >> extra) throw fail();
    ops.push_back(op);
  }
  return ops;
}

struct TraceResult {
  // One reply per P line, from the encoded array.
  std::vector<std::int64_t> replies;
  // First P line (0-based op position) whose reply disagrees with a plain
  // array, if any.
  std::optional<std::size_t> first_mismatch;
};

/// Replays ops from an all-zero state on both an encoded array and a plain
/// logical array, comparing every prefix reply.
template <class Domain>
TraceResult run_trace(const Forest& f, const std::vector<TraceOp>& ops) {
  using value_type = typename Domain::value_type;
  EncodedArray<Domain> encoded(f);
  std::vector<value_type> plain(f.size(), Domain::zero());
  TraceResult result;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& op = ops[i];
    f.check_index(op.index);
    if (op.kind == TraceOp::Kind::update) {
      const auto delta = static_cast<value_type>(op.delta);
      if (static_cast<std::int64_t>(delta) != op.delta) {
        throw FormatError("trace delta " + std::to_string(op.delta) + " not representable in " +
                          Domain::name + " mode");
      }
      encoded.apply_update(op.index, delta);
      plain[op.index] = Domain::add(plain[op.index], delta);
      continue;
    }
    const auto got = encoded.prefix_sum(op.index, op.boundary);
    const std::size_t end = op.boundary == Boundary::inclusive ? op.index + 1 : op.index;
    value_type want = Domain::zero();
    for (std::size_t k = 0; k < end; ++k) want = Domain::add(want, plain[k]);
    result.replies.push_back(static_cast<std::int64_t>(got));
    if (got != want && !result.first_mismatch) result.first_mismatch = i;
  }
  return result;
}

} // namespace sierpinski
