#include <iomanip>
#include <sstream>

#include "commands.hpp"

namespace cli {

namespace {

std::string join_torsion(const Json& cell) {
  if (!cell.contains("torsion")) return "";
  std::string out;
  for (const auto& d : cell["torsion"]) out += (out.empty() ? "Z/" : " Z/") + d.get<std::string>();
  return out.empty() ? "-" : out;
}

void text_e2(std::ostream& os, const Json& r) {
  os << "E2 of " << r["object"].get<std::string>() << "  s " << r["s"][0] << ".." << r["s"][1] << ", t "
     << r["t"][0] << ".." << r["t"][1];
  if (r["integral"].get<bool>()) os << "  (" << r["note"].get<std::string>() << ")";
  os << "\n";
  os << std::setw(4) << "s" << std::setw(4) << "t" << std::setw(8) << "dim" << std::setw(8) << "ker"
     << std::setw(8) << "im" << std::setw(7) << "rank";
  if (r["integral"].get<bool>()) os << "  torsion";
  os << "\n";
  for (const auto& c : r["cells"]) {
    // json's operator<< reads the stream width as an indent; print plain integers.
    auto n = [&](const char* key) { return c[key].get<long>(); };
    os << std::setw(4) << n("s") << std::setw(4) << n("t") << std::setw(8) << n("dimension") << std::setw(8)
       << n("kernel") << std::setw(8) << n("image") << std::setw(7) << n("rank");
    if (r["integral"].get<bool>()) os << "  " << join_torsion(c);
    os << "\n";
  }
}

void text_verify(std::ostream& os, const Json& r) {
  for (const auto& c : r["checks"]) {
    os << (c["ok"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    const auto& detail = c["detail"].get<std::string>();
    if (!detail.empty()) os << "  [" << detail << "]";
    os << "\n";
    if (c.contains("witness"))
      for (const auto& [key, value] : c["witness"].items())
        os << "    " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  os << r["suite"].get<std::string>() << ": " << r["passed"] << " passed, " << r["failed"] << " failed\n";
}

void text_splice(std::ostream& os, const Json& r) {
  const auto& obj = r["object"];
  os << obj["label"].get<std::string>() << "  (junction level " << r["junction_level"] << ")\n";
  for (const auto& g : obj["generators"]) {
    os << "  " << g["name"].get<std::string>() << "  degree " << g["reduced_degree"] << "  home " << g["home_dim"];
    const auto& a = g["attaching"].get<std::string>();
    if (a != "0") os << "  d0 = " << a;
    os << "\n";
  }
  const auto& id = r["identities"];
  os << "identities to level " << id["max_level"] << ": " << id["checked"] << " checked, " << id["violations"].size()
     << " violations\n";
  for (const auto& v : id["violations"])
    os << "  level " << v["level"] << " (i,j)=(" << v["i"] << "," << v["j"] << ") on "
       << v["letter"].get<std::string>() << ": " << v["difference"].get<std::string>() << "\n";
}

void text_hall(std::ostream& os, const Json& r) {
  for (const auto& d : r["degrees"]) {
    os << "degree " << d["t"] << ": dimension " << d["dimension"] << "\n";
    for (const auto& m : d["basis"]) os << "  " << m.get<std::string>() << "\n";
  }
}

void text_fixtures(std::ostream& os, const Json& r) {
  if (r.contains("written")) {
    for (const auto& f : r["written"]) os << "wrote " << f.get<std::string>() << "\n";
    return;
  }
  for (const auto& f : r["fixtures"]) {
    os << f["file"].get<std::string>() << "  ";
    if (f["kind"] == "resolution")
      os << f["label"].get<std::string>() << "  (" << f["generators"] << " generators)\n";
    else
      os << "element of " << f["object"].get<std::string>() << ": " << f["expression"].get<std::string>() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& r) {
  std::ostringstream os;
  const auto verb = r["verb"].get<std::string>();
  if (verb == "formula") os << r["expression"].get<std::string>() << "\n";
  else if (verb == "e2") text_e2(os, r);
  else if (verb == "verify") text_verify(os, r);
  else if (verb == "splice") text_splice(os, r);
  else if (verb == "hall") text_hall(os, r);
  else text_fixtures(os, r);
  return os.str();
}

std::string render_latex(const Json& r) {
  std::ostringstream os;
  if (r["verb"] == "formula") {
    std::string body = r["latex"].get<std::string>();
    if (body.empty() || body.back() != '\n') body += '\n';
    return body;
  }
  // E2 ranks as an array: rows t (descending), columns s.
  const int s_lo = r["s"][0], s_hi = r["s"][1], t_lo = r["t"][0], t_hi = r["t"][1];
  const int width = s_hi - s_lo + 1;
  os << "\\begin{array}{r|" << std::string(width, 'c') << "}\n";
  for (int t = t_hi; t >= t_lo; --t) {
    os << t;
    for (int s = s_lo; s <= s_hi; ++s) {
      const auto& c = r["cells"][static_cast<std::size_t>((t - t_lo) * width + (s - s_lo))];
      os << " & " << c["rank"];
    }
    os << " \\\\\n";
  }
  os << "\\hline\n";
  for (int s = s_lo; s <= s_hi; ++s) os << " & " << s;
  os << "\n\\end{array}\n";
  return os.str();
}

}  // namespace cli
