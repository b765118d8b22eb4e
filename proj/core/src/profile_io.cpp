#include "sigmavote/profile_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "sigmavote/errors.hpp"

namespace sigmavote {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// RFC 4180 field splitting for one physical line; quoted fields may contain
// commas and doubled quotes but not line breaks.
std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (number == 1 && text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);
    lines.push_back({number, std::move(text)});
  }
  return lines;
}

Rational parse_weight(std::string_view text, const Location& where) {
  Rational w;
  try {
    w = parse_rational(text);
  } catch (const ValueError&) {
    throw ValueError("invalid ballot weight '" + std::string(trim(text)) + "'", where);
  }
  if (w <= 0) throw ValueError("ballot weight must be positive, got " + to_string(w), where);
  return w;
}

int parse_seats(std::string_view text, const Location& where) {
  auto t = trim(text);
  int value = 0;
  bool ok = !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (ok) {
    try {
      value = std::stoi(std::string(t));
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (!ok || value < 1) throw ValueError("invalid seat count '" + std::string(t) + "'", where);
  return value;
}

void check_repeat(std::vector<char>& seen, Candidate c, const CandidateRoster& roster, const Location& where) {
  if (seen[c.id]) throw BallotError("candidate '" + roster.name(c) + "' appears twice in one ballot", where);
  seen[c.id] = 1;
}

Election parse_canonical(const std::vector<Line>& lines, std::string_view source) {
  std::optional<CandidateRoster> roster;
  std::optional<int> seats;
  std::map<std::string, std::string> metadata;
  std::string election_id;
  bool header_seen = false;
  std::vector<Ballot> ballots;

  for (const Line& line : lines) {
    const Location where{std::string(source), line.number};
    auto text = trim(line.text);
    if (text.empty()) continue;
    if (text.front() == '#') {
      if (header_seen) continue;
      auto body = trim(text.substr(1));
      auto colon = body.find(':');
      if (colon == std::string_view::npos) continue;
      auto key = trim(body.substr(0, colon));
      auto value = trim(body.substr(colon + 1));
      if (key == "candidates") {
        std::vector<std::string> names;
        for (auto part : split(value, ',')) names.emplace_back(trim(part));
        try {
          roster.emplace(std::move(names));
        } catch (const RosterError& e) {
          throw RosterError(e.what(), where);
        }
      } else if (key == "seats") {
        seats = parse_seats(value, where);
      } else if (key == "election") {
        election_id = std::string(value);
      } else {
        metadata.emplace(std::string(key), std::string(value));
      }
      continue;
    }
    if (!header_seen) {
      std::string header(text);
      header.erase(std::remove_if(header.begin(), header.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                   header.end());
      if (header != "weight,ranking") throw ParseError("expected header 'weight,ranking'", where);
      if (!roster) throw ParseError("missing '# candidates: ...' line before the header", where);
      header_seen = true;
      continue;
    }
    auto comma = text.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected 'weight,ranking' row", where);
    Ballot ballot;
    ballot.weight = parse_weight(text.substr(0, comma), where);
    auto ranking = trim(text.substr(comma + 1));
    if (!ranking.empty()) {
      std::vector<char> seen(roster->id_bound(), 0);
      for (auto part : split(ranking, '>')) {
        auto name = trim(part);
        auto c = roster->find(name);
        if (!c) throw RosterError("unknown candidate '" + std::string(name) + "'", where);
        check_repeat(seen, *c, *roster, where);
        ballot.ranking.push_back(*c);
      }
    }
    ballots.push_back(std::move(ballot));
  }
  if (!roster) throw ParseError("missing '# candidates: ...' line", Location{std::string(source), 1});
  if (!header_seen) throw ParseError("missing 'weight,ranking' header", Location{std::string(source), lines.size()});
  try {
    return Election{std::move(election_id), Profile(std::move(*roster), std::move(ballots)), seats, std::move(metadata)};
  } catch (const Error& e) {
    throw ValueError(e.what(), Location{std::string(source), lines.empty() ? 0 : lines.back().number});
  }
}

bool is_candidate_row(const std::vector<std::string>& fields) {
  return !fields.empty() && fields[0].find("Candidate") != std::string::npos;
}

Election parse_position_columns(const std::vector<Line>& lines, std::string_view source) {
  struct Row {
    std::size_t number;
    std::vector<std::string> fields;  // blanks removed
  };
  std::vector<Row> rows;
  for (const Line& line : lines) {
    auto raw = split_csv_line(line.text);
    std::vector<std::string> fields;
    for (auto& f : raw) {
      auto t = trim(f);
      if (!t.empty()) fields.emplace_back(t);
    }
    if (!fields.empty()) rows.push_back({line.number, std::move(fields)});
  }
  if (rows.empty()) throw ParseError("empty file", Location{std::string(source), 1});

  const Location head{std::string(source), rows.front().number};
  if (rows.front().fields.size() != 2) {
    throw ParseError("first row must be 'number_of_candidates,seats'", head);
  }
  int declared = 0;
  try {
    declared = std::stoi(rows.front().fields[0]);
  } catch (const std::exception&) {
    throw ParseError("invalid candidate count '" + rows.front().fields[0] + "'", head);
  }
  int seats = parse_seats(rows.front().fields[1], head);

  std::vector<std::string> names;
  std::map<std::string, std::string> metadata;
  std::vector<const Row*> ballot_rows;
  std::size_t last = rows.size();
  // A trailing non-candidate, non-numeric row is the ward name.
  if (rows.size() >= 2 && !is_candidate_row(rows.back().fields) &&
      !std::isdigit(static_cast<unsigned char>(rows.back().fields[0].front()))) {
    metadata["ward"] = rows.back().fields[0];
    last = rows.size() - 1;
  }
  for (std::size_t i = 1; i < last; ++i) {
    const Row& row = rows[i];
    if (is_candidate_row(row.fields)) {
      if (row.fields.size() < 2) throw ParseError("candidate row without a name", Location{std::string(source), row.number});
      names.push_back(row.fields[1]);
      if (row.fields.size() >= 3) metadata["party:" + row.fields[1]] = row.fields[2];
    } else {
      if (!names.empty()) throw ParseError("ballot row after the candidate list", Location{std::string(source), row.number});
      ballot_rows.push_back(&row);
    }
  }
  if (declared < 1 || static_cast<std::size_t>(declared) != names.size()) {
    throw ParseError("header declares " + std::to_string(declared) + " candidates but " + std::to_string(names.size()) +
                         " candidate rows follow",
                     head);
  }
  CandidateRoster roster = [&] {
    try {
      return CandidateRoster(names);
    } catch (const RosterError& e) {
      throw RosterError(e.what(), head);
    }
  }();

  std::vector<Ballot> ballots;
  ballots.reserve(ballot_rows.size());
  for (const Row* row : ballot_rows) {
    const Location where{std::string(source), row->number};
    Ballot ballot;
    ballot.weight = parse_weight(row->fields[0], where);
    std::vector<char> seen(roster.id_bound(), 0);
    for (std::size_t j = 1; j < row->fields.size(); ++j) {
      const std::string& cell = row->fields[j];
      std::size_t index = 0;
      bool ok = std::all_of(cell.begin(), cell.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (ok) index = std::stoul(cell);
      if (!ok || index < 1 || index > roster.size()) {
        throw RosterError("unknown candidate index '" + cell + "'", where);
      }
      Candidate c = roster.at(index - 1);
      check_repeat(seen, c, roster, where);
      ballot.ranking.push_back(c);
    }
    ballots.push_back(std::move(ballot));
  }
  std::string id = metadata.count("ward") ? metadata["ward"] : std::string();
  try {
    return Election{std::move(id), Profile(std::move(roster), std::move(ballots)), seats, std::move(metadata)};
  } catch (const Error& e) {
    throw ValueError(e.what(), head);
  }
}

}  // namespace

Election parse_election(std::istream& in, ProfileFormat format, std::string_view source) {
  auto lines = read_lines(in);
  switch (format) {
    case ProfileFormat::canonical_csv:
      return parse_canonical(lines, source);
    case ProfileFormat::position_columns_csv:
      return parse_position_columns(lines, source);
  }
  throw ArgumentError("unknown profile format");
}

Election parse_election(std::string_view text, ProfileFormat format, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse_election(in, format, source);
}

ProfileFormat detect_format(std::string_view text) {
  std::istringstream in{std::string(text.substr(0, 4096))};
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.size() >= 3 && t.substr(0, 3) == "\xEF\xBB\xBF") t.remove_prefix(3);
    if (t.empty()) continue;
    if (t.front() == '#' || t.substr(0, 6) == "weight") return ProfileFormat::canonical_csv;
    return ProfileFormat::position_columns_csv;
  }
  return ProfileFormat::canonical_csv;
}

Election read_election(const std::filesystem::path& path, std::optional<ProfileFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", Location{path.string(), 0});
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  ProfileFormat f = format.value_or(detect_format(text));
  Election e = parse_election(std::string_view(text), f, path.string());
  if (f == ProfileFormat::position_columns_csv || e.election_id.empty()) {
    if (!e.election_id.empty()) e.metadata.emplace("title", e.election_id);
    e.election_id = path.stem().string();
  }
  return e;
}

void write_profile(std::ostream& out, const Profile& p, std::optional<int> seats) {
  const auto& roster = p.roster();
  out << "# candidates: ";
  for (std::size_t i = 0; i < roster.size(); ++i) {
    if (i) out << ',';
    out << roster.name(roster.at(i));
  }
  out << '\n';
  if (seats) out << "# seats: " << *seats << '\n';
  out << "weight,ranking\n";
  for (const Ballot& b : p.ballots()) {
    out << to_string(b.weight) << ',';
    for (std::size_t i = 0; i < b.ranking.size(); ++i) {
      if (i) out << '>';
      out << roster.name(b.ranking[i]);
    }
    out << '\n';
  }
}

std::string write_profile(const Profile& p, std::optional<int> seats) {
  std::ostringstream out;
  write_profile(out, p, seats);
  return out.str();
}

}  // namespace sigmavote
