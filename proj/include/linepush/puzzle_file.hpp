#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "compact.hpp"
#include "configuration.hpp"
#include "perm_engine.hpp"

namespace linepush {

enum class PuzzleKind { compaction, permutation };

inline const char* to_string(PuzzleKind k) { return k == PuzzleKind::compaction ? "compaction" : "permutation"; }

inline PuzzleKind puzzle_kind_from_string(const std::string& s) {
  if (s == "compaction") return PuzzleKind::compaction;
  if (s == "permutation") return PuzzleKind::permutation;
  throw std::invalid_argument("unknown puzzle kind '" + s + "'");
}

struct PuzzleInstance {
  std::string id;
  Configuration start;
  Configuration goal;
  PuzzleKind kind = PuzzleKind::permutation;
  std::string notes;
};

class puzzle_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Empty when the instance is well formed, otherwise the reason it is not.
inline std::string validate(const PuzzleInstance& p) {
  if (p.start.size() != p.goal.size()) return "start and goal have different token counts";
  if (p.kind == PuzzleKind::compaction) {
    if (p.goal.area() != static_cast<long>(p.goal.size())) return "compaction goal is not a full box";
    return {};
  }
  if (!is_compact(p.start)) return "start is not compact";
  if (!is_compact(p.goal)) return "goal is not compact";
  if (!(canonical_shape(p.start) == canonical_shape(p.goal))) return "start and goal have different shapes";
  auto sorted = [](const Configuration& c) {
    std::vector<char> v(c.labels().begin(), c.labels().end());
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(p.start) != sorted(p.goal)) return "label multisets differ";
  const Configuration ks = canonical_form(p.start).config, kg = canonical_form(p.goal).config;
  const auto geom = core_geometry(ks);
  for (Point q : geom.core)
    if (ks.label(ks.at(q)) != kg.label(kg.at(q))) return "core labels differ";
  return {};
}

// Two grids separated by a line "---", optionally preceded by header lines of
// the form "# key: value" (keys: kind, notes).
inline PuzzleInstance parse_puzzle(const std::string& text, const std::string& id = {}) {
  std::istringstream in(text);
  std::string line;
  std::map<std::string, std::string> header;
  std::string grids[2];
  int part = 0;
  bool in_header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (in_header && line.rfind("# ", 0) == 0) {
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw puzzle_error("malformed header line: " + line);
      std::string key = line.substr(2, colon - 2), value = line.substr(colon + 1);
      value.erase(0, value.find_first_not_of(' '));
      header[key] = value;
      continue;
    }
    in_header = false;
    if (line == "---") {
      if (++part > 1) throw puzzle_error("more than one separator");
      continue;
    }
    grids[part] += line + "\n";
  }
  if (part != 1) throw puzzle_error("missing '---' separator");

  PuzzleInstance p{id, parse_grid(grids[0]), parse_grid(grids[1]), PuzzleKind::permutation, {}};
  if (auto it = header.find("kind"); it != header.end()) {
    p.kind = puzzle_kind_from_string(it->second);
  } else {
    p.kind = p.goal.area() == static_cast<long>(p.goal.size()) && !is_compact(p.start) ? PuzzleKind::compaction
                                                                                         : PuzzleKind::permutation;
  }
  if (auto it = header.find("notes"); it != header.end()) p.notes = it->second;
  if (const auto why = validate(p); !why.empty()) throw puzzle_error(why);
  return p;
}

inline std::string format_puzzle(const PuzzleInstance& p) {
  std::string out = std::string("# kind: ") + to_string(p.kind) + "\n";
  if (!p.notes.empty()) out += "# notes: " + p.notes + "\n";
  return out + format_grid(p.start) + "\n---\n" + format_grid(p.goal) + "\n";
}

inline PuzzleInstance load_puzzle(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_puzzle(ss.str(), path.stem().string());
}

inline constexpr const char* puzzle_extension = ".puzzle";

// Read-only collection of the puzzles in a directory; files that fail to
// load are listed with the reason.
class PuzzleStore {
 public:
  PuzzleStore() = default;

  static PuzzleStore load(const std::filesystem::path& dir) {
    PuzzleStore s;
    if (!std::filesystem::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == puzzle_extension) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        s.add(load_puzzle(f));
      } catch (const std::exception& e) {
        s.rejected_.emplace_back(f.filename().string(), e.what());
      }
    }
    return s;
  }

  void add(PuzzleInstance p) {
    const std::string id = p.id;
    puzzles_.insert_or_assign(id, std::move(p));
  }

  const PuzzleInstance* find(const std::string& id) const {
    auto it = puzzles_.find(id);
    return it == puzzles_.end() ? nullptr : &it->second;
  }

  const std::map<std::string, PuzzleInstance>& all() const noexcept { return puzzles_; }
  const std::vector<std::pair<std::string, std::string>>& rejected() const noexcept { return rejected_; }

 private:
  std::map<std::string, PuzzleInstance> puzzles_;
  std::vector<std::pair<std::string, std::string>> rejected_;
};

}  // namespace linepush
