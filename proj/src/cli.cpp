#include "seshadri/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "seshadri/multipoint.hpp"
#include "seshadri/ns_lattice.hpp"

namespace seshadri::cli {

using nlohmann::json;

json to_json(const Rational& q) { return q.to_string(); }

json to_json(const SqrtQuantity& s) { return json{{"sqrt_of", s.radicand().to_string()}}; }

json integer_json(const BigInt& n) {
  if (n.fits_slong_p() && std::numeric_limits<long>::digits >= 63) {
    return static_cast<std::int64_t>(n.get_si());
  }
  return n.get_str();
}

json to_json(const RationalityVerdict& verdict) {
  json conditions = json::array();
  for (const auto& c : verdict.matched_conditions) {
    json entry{{"cond", c.index}};
    if (c.index == 4) entry["k"] = integer_json(*c.parameter);
    if (c.index == 5) entry["l"] = integer_json(*c.parameter);
    conditions.push_back(std::move(entry));
  }
  json out{{"conditions", std::move(conditions)}};
  out["submaximal_fiber"] =
      verdict.submaximal_fiber ? json(to_string(*verdict.submaximal_fiber)) : json(nullptr);
  return out;
}

namespace {

json class_json(const DivisorClass& d) {
  return json::array({d.a1.get_str(), d.a2.get_str(), d.a3.get_str()});
}

}  // namespace

json to_json(const SearchReport& report) {
  json known = json::array();
  for (const auto& k : report.known) {
    known.push_back({{"curve", k.name}, {"class", class_json(k.cls)}, {"ratio", to_json(k.ratio)}});
  }
  json surviving = json::array();
  for (const auto& s : report.surviving) {
    json mults = json::array();
    for (long m : s.curve.mults()) mults.push_back(std::to_string(m));
    surviving.push_back(
        {{"class", class_json(s.curve.cls())}, {"mults", std::move(mults)}, {"ratio", to_json(s.ratio)}});
  }
  return json{{"box", std::to_string(report.box_bound)},
              {"threshold", to_json(report.threshold)},
              {"floor", to_json(report.floor)},
              {"certified", report.certified},
              {"label", report.certified ? "exact" : "evidence"},
              {"known", std::move(known)},
              {"surviving", std::move(surviving)}};
}

json OutputRecord::to_json() const {
  json out{{"command", command}, {"inputs", inputs}, {"result", result},
           {"status", ok ? "ok" : "error"}};
  if (message) out["message"] = *message;
  return out;
}

namespace {

// Signals an input problem detected after flag parsing; maps to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& text) {
  if (text == "plain") return Format::Plain;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw InputError("unknown format '" + text + "' (expected plain, json or csv)");
}

std::string plain_scalar(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_object() && value.size() == 1 && value.contains("sqrt_of")) {
    return "sqrt(" + value["sqrt_of"].get<std::string>() + ")";
  }
  if (value.is_array() &&
      std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_string(); })) {
    std::string joined;
    for (const auto& v : value) joined += (joined.empty() ? "" : " ") + v.get<std::string>();
    return joined;
  }
  return value.dump();
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

void emit(const OutputRecord& record, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << record.to_json().dump() << '\n';
      return;
    case Format::Plain:
      if (!record.ok) {
        out << "error: " << record.message.value_or("") << '\n';
      } else if (record.result.is_object()) {
        for (const auto& [key, value] : record.result.items()) {
          out << key << ": " << plain_scalar(value) << '\n';
        }
      } else {
        out << plain_scalar(record.result) << '\n';
      }
      return;
    case Format::Csv:
      out << "key,value\n";
      if (!record.ok) {
        out << "error," << csv_cell(record.message.value_or("")) << '\n';
      } else if (record.result.is_object()) {
        for (const auto& [key, value] : record.result.items()) {
          out << csv_cell(key) << ',' << csv_cell(plain_scalar(value)) << '\n';
        }
      } else {
        out << "result," << csv_cell(plain_scalar(record.result)) << '\n';
      }
      return;
  }
}

BigInt parse_flag_integer(const std::string& name, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw InputError("--" + name + " expects an integer, got '" + text + "'");
  }
}

struct IntRange {
  BigInt lo;
  BigInt hi;
};

IntRange parse_range(const std::string& name, const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw InputError("--" + name + " expects LO:HI, got '" + text + "'");
  }
  IntRange range{parse_flag_integer(name, text.substr(0, colon)),
                 parse_flag_integer(name, text.substr(colon + 1))};
  if (range.lo > range.hi) throw InputError("--" + name + " has LO > HI");
  return range;
}

Genus parse_genus(const std::string& text) {
  BigInt g = parse_flag_integer("g", text);
  if (g < 2) throw InputError("genus must be >= 2, got " + g.get_str());
  return Genus(g);
}

long to_long(const std::string& name, const BigInt& n, long lo, long hi) {
  if (n < lo || n > hi) {
    throw InputError("--" + name + " must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return n.get_si();
}

// Flags shared by the subcommands. Everything is read as text and validated
// here so that error messages and exit codes are uniform.
struct Flags {
  std::string format = "json";
  std::string g;
  std::string a1, a2, a3, b1, b2, b3;
  std::string r;
  bool oracle = false;
  std::string points;
  std::string box;
  std::string threshold;
  std::string share = "none";
  std::string on_diagonal = "0";
  std::string threads = "0";
  std::string a1_range, a2_range, a3_range;
};

void add_format(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "plain, json or csv")->capture_default_str();
}

void add_class(CLI::App* cmd, Flags& f) {
  cmd->add_option("--g", f.g, "genus of C (>= 2)")->required();
  cmd->add_option("--a1", f.a1, "coefficient of F1")->required();
  cmd->add_option("--a2", f.a2, "coefficient of F2")->required();
  cmd->add_option("--a3", f.a3, "coefficient of the diagonal")->required();
}

struct ParsedClass {
  Genus g;
  DivisorClass cls;
};

ParsedClass read_class(const Flags& f, std::map<std::string, std::string>& inputs) {
  Genus g = parse_genus(f.g);
  DivisorClass cls(parse_flag_integer("a1", f.a1), parse_flag_integer("a2", f.a2),
                   parse_flag_integer("a3", f.a3));
  inputs["g"] = g.value().get_str();
  inputs["a1"] = cls.a1.get_str();
  inputs["a2"] = cls.a2.get_str();
  inputs["a3"] = cls.a3.get_str();
  return {g, cls};
}

void require_ample(const DivisorClass& l, const Genus& g) {
  if (!ample_necessary(l, g)) {
    throw InputError("class " + l.to_string() + " fails the ampleness conditions for g = " +
                     g.value().get_str());
  }
}

json classify_multipoint(const Flags& f, std::map<std::string, std::string>& inputs) {
  BigInt r = parse_flag_integer("r", f.r);
  if (r < 2) throw InputError("--r must be >= 2");
  inputs["r"] = r.get_str();
  json values = json::array();
  if (!f.oracle) {
    for (const auto& v : possible_values(r)) values.push_back(to_json(v));
    return json{{"values", std::move(values)}};
  }
  inputs["oracle"] = "true";
  json pairs = json::array();
  for (const auto& p : feasible_pairs(r)) pairs.push_back({{"d", p.d.get_str()}, {"m", p.m.get_str()}});
  for (const auto& v : oracle_values(r)) values.push_back(to_json(v));
  return json{{"values", std::move(values)}, {"pairs", std::move(pairs)}};
}

PointConfig two_point_config(const std::string& points) {
  if (points == "two-general") return PointConfig::two_points(TwoPointConfig::General);
  if (points == "two-same-f1") return PointConfig::two_points(TwoPointConfig::SameFiberF1);
  return PointConfig::two_points(TwoPointConfig::SameFiberF2);
}

json epsilon(const Flags& f, std::map<std::string, std::string>& inputs) {
  auto [g, l] = read_class(f, inputs);
  std::string points = f.points.empty() ? "one" : f.points;
  if (points != "one" && points != "two-general" && points != "two-same-f1" &&
      points != "two-same-f2") {
    throw InputError("--points must be one, two-general, two-same-f1 or two-same-f2");
  }
  inputs["points"] = points;
  require_ample(l, g);

  if (l.a3 == 0) {
    if (points == "one") return to_json(epsilon_fiber_one_point(l.a1, l.a2));
    TwoPointConfig cfg = points == "two-general"   ? TwoPointConfig::General
                         : points == "two-same-f1" ? TwoPointConfig::SameFiberF1
                                                   : TwoPointConfig::SameFiberF2;
    return to_json(epsilon_fiber_two_points(l.a1, l.a2, cfg));
  }

  PointConfig config = points == "one" ? PointConfig::very_general(1) : two_point_config(points);
  auto known = known_curve_bounds(l, g, config);
  Rational upper = known.front().ratio;
  json witnesses = json::array();
  for (const auto& k : known) {
    upper = min(upper, k.ratio);
    witnesses.push_back({{"curve", k.name}, {"ratio", to_json(k.ratio)}});
  }
  return json{{"upper_bound", to_json(upper)},
              {"known", std::move(witnesses)},
              {"sqrt_bound", to_json(multipoint_upper_bound(self_int(l, g), BigInt(config.size())))},
              {"rationality", to_json(rationality_classify(l, g))}};
}

json rationality(const Flags& f, std::map<std::string, std::string>& inputs) {
  auto [g, l] = read_class(f, inputs);
  require_ample(l, g);
  return to_json(rationality_classify(l, g));
}

json search(const Flags& f, std::map<std::string, std::string>& inputs) {
  auto [g, l] = read_class(f, inputs);
  long npoints = to_long("points", parse_flag_integer("points", f.points), 1, 64);
  long box = to_long("box", parse_flag_integer("box", f.box), 1, 1000);
  long on_diag = to_long("on-diagonal", parse_flag_integer("on-diagonal", f.on_diagonal), 0, npoints);
  long threads = to_long("threads", parse_flag_integer("threads", f.threads), 0, 1024);
  Rational threshold;
  try {
    threshold = Rational::parse(f.threshold);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--threshold: ") + e.what());
  }
  if (threshold.sign() <= 0) throw InputError("--threshold must be positive");
  if (f.share != "none" && f.share != "f1" && f.share != "f2") {
    throw InputError("--share must be none, f1 or f2");
  }
  if (f.share != "none" && npoints < 2) throw InputError("--share needs at least two points");
  inputs["points"] = std::to_string(npoints);
  inputs["box"] = std::to_string(box);
  inputs["threshold"] = threshold.to_string();
  inputs["share"] = f.share;
  inputs["on-diagonal"] = std::to_string(on_diag);
  require_ample(l, g);

  std::vector<PointConfig::Point> pts;
  for (long i = 0; i < npoints; ++i) pts.push_back({i, i, i < on_diag});
  if (f.share == "f1") pts[1].f1_fiber = pts[0].f1_fiber;
  if (f.share == "f2") pts[1].f2_fiber = pts[0].f2_fiber;
  std::optional<PointConfig> config;
  try {
    config.emplace(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return to_json(enumerate_candidates(l, g, *config, box, threshold,
                                      static_cast<unsigned>(threads)));
}

DivisorClass read_second_class(const Flags& f, std::map<std::string, std::string>& inputs) {
  DivisorClass e(parse_flag_integer("b1", f.b1), parse_flag_integer("b2", f.b2),
                 parse_flag_integer("b3", f.b3));
  inputs["b1"] = e.a1.get_str();
  inputs["b2"] = e.a2.get_str();
  inputs["b3"] = e.a3.get_str();
  return e;
}

json lattice(const std::string& op, const Flags& f, std::map<std::string, std::string>& inputs) {
  if (op == "canonical") {
    Genus g = parse_genus(f.g);
    inputs["g"] = g.value().get_str();
    DivisorClass k = canonical_class(g);
    return json{{"class", class_json(k)}, {"self_int", self_int(k, g).get_str()}};
  }
  auto [g, d] = read_class(f, inputs);
  if (op == "intersect") return intersect(d, read_second_class(f, inputs), g).get_str();
  if (op == "selfint") return self_int(d, g).get_str();
  if (op == "genus") return to_json(arithmetic_genus(d, g));
  if (op == "ample") return json{{"ample_necessary", ample_necessary(d, g)}};
  if (op == "minus-two") return json{{"minus_two", is_minus_two_class(d, g)}};
  // hodge: L is the --a class, D the --b class.
  DivisorClass e = read_second_class(f, inputs);
  if (self_int(d, g) <= 0) throw InputError("hodge needs L^2 > 0 for the --a class");
  return hodge_gap(d, e, g).get_str();
}

std::string flag01(bool b) { return b ? "1" : "0"; }

void scan_rationality(const Flags& f, Format format, std::ostream& out) {
  Genus g = parse_genus(f.g);
  IntRange r1 = parse_range("a1-range", f.a1_range);
  IntRange r2 = parse_range("a2-range", f.a2_range);
  IntRange r3 = parse_range("a3-range", f.a3_range);
  if (format != Format::Json) out << kScanCsvHeader << '\n';
  for (BigInt a1 = r1.lo; a1 <= r1.hi; ++a1) {
    for (BigInt a2 = r2.lo; a2 <= r2.hi; ++a2) {
      for (BigInt a3 = r3.lo; a3 <= r3.hi; ++a3) {
        DivisorClass l(a1, a2, a3);
        if (!ample_necessary(l, g)) continue;
        RationalityVerdict v = rationality_classify(l, g);
        std::array<bool, 6> cond{};
        for (const auto& c : v.matched_conditions) cond[c.index] = true;
        BigInt l2 = self_int(l, g);
        if (format == Format::Json) {
          OutputRecord row{"scan-rationality",
                           {{"g", g.value().get_str()},
                            {"a1", a1.get_str()},
                            {"a2", a2.get_str()},
                            {"a3", a3.get_str()}},
                           to_json(v),
                           true,
                           std::nullopt};
          row.result["L2"] = l2.get_str();
          out << row.to_json().dump() << '\n';
          continue;
        }
        out << g.value() << ',' << a1 << ',' << a2 << ',' << a3;
        for (int i = 1; i <= 5; ++i) out << ',' << flag01(cond[i]);
        out << ',' << (v.k ? v.k->get_str() : "") << ',' << (v.l ? v.l->get_str() : "") << ','
            << (v.submaximal_fiber ? to_string(*v.submaximal_fiber) : "") << ',' << l2 << '\n';
      }
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Seshadri-constant computations on C x C and surfaces of general type",
               "seshadri"};
  app.require_subcommand(1);
  Flags f;

  auto* classify = app.add_subcommand("classify-multipoint",
                                      "values 0 < eps(K_X; r points) < 1/r can take");
  classify->add_option("--r", f.r, "number of points (>= 2)")->required();
  classify->add_flag("--oracle", f.oracle, "derive the values from the phi enumeration");
  add_format(classify, f);

  auto* eps = app.add_subcommand("epsilon", "Seshadri constant or bounds for a class on C x C");
  add_class(eps, f);
  eps->add_option("--points", f.points, "one, two-general, two-same-f1 or two-same-f2");
  add_format(eps, f);

  auto* rat = app.add_subcommand("rationality", "sufficient conditions for a rational eps(L)");
  add_class(rat, f);
  add_format(rat, f);

  auto* srch = app.add_subcommand("search", "bounded enumeration of candidate Seshadri curves");
  add_class(srch, f);
  srch->add_option("--points", f.points, "number of points")->required();
  srch->add_option("--box", f.box, "bound on |a_i| of scanned classes")->required();
  srch->add_option("--threshold", f.threshold, "report ratios below this rational")->required();
  srch->add_option("--share", f.share, "none, f1 or f2: points 1 and 2 share that fiber");
  srch->add_option("--on-diagonal", f.on_diagonal, "number of points on the diagonal");
  srch->add_option("--threads", f.threads, "worker threads (0 = hardware)");
  add_format(srch, f);

  auto* scan = app.add_subcommand("scan-rationality", "rationality verdict for every class in a box");
  scan->add_option("--g", f.g, "genus of C (>= 2)")->required();
  scan->add_option("--a1-range", f.a1_range, "LO:HI")->required();
  scan->add_option("--a2-range", f.a2_range, "LO:HI")->required();
  scan->add_option("--a3-range", f.a3_range, "LO:HI")->required();
  scan->add_option("--format", f.format, "csv or json")->capture_default_str();

  auto* lat = app.add_subcommand("lattice", "intersection numbers on NS(C x C)");
  lat->require_subcommand(1);
  std::map<CLI::App*, std::string> lattice_ops;
  for (const char* name : {"intersect", "selfint", "genus", "ample", "minus-two", "hodge"}) {
    auto* op = lat->add_subcommand(name);
    add_class(op, f);
    if (std::string(name) == "intersect" || std::string(name) == "hodge") {
      op->add_option("--b1", f.b1)->required();
      op->add_option("--b2", f.b2)->required();
      op->add_option("--b3", f.b3)->required();
    }
    add_format(op, f);
    lattice_ops[op] = name;
  }
  auto* canon = lat->add_subcommand("canonical");
  canon->add_option("--g", f.g, "genus of C (>= 2)")->required();
  add_format(canon, f);
  lattice_ops[canon] = "canonical";

  std::vector<std::string> storage{"seshadri"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  OutputRecord record;
  record.command = args.empty() ? "" : args.front();
  Format format = Format::Json;
  auto fail = [&](const std::string& message) {
    record.ok = false;
    record.result = nullptr;
    record.message = message;
    emit(record, format, out);
    err << "seshadri: " << message << '\n';
    return 2;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    record.inputs.clear();
    return fail(e.what());
  }

  try {
    format = parse_format(f.format);
    if (*classify) {
      record.result = classify_multipoint(f, record.inputs);
    } else if (*eps) {
      record.result = epsilon(f, record.inputs);
    } else if (*rat) {
      record.result = rationality(f, record.inputs);
    } else if (*srch) {
      record.result = search(f, record.inputs);
    } else if (*scan) {
      if (format == Format::Plain) format = Format::Csv;
      scan_rationality(f, format, out);
      return 0;
    } else {
      for (const auto& [op, name] : lattice_ops) {
        if (*op) {
          record.command = "lattice " + name;
          record.result = lattice(name, f, record.inputs);
        }
      }
    }
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  } catch (const std::domain_error& e) {
    return fail(e.what());
  }
  emit(record, format, out);
  return 0;
}

}  // namespace seshadri::cli
