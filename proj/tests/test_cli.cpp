#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// End-to-end checks driving the installed binary through std::system.

namespace {

const std::string& workdir() {
  static const std::string dir = [] {
    namespace fs = std::filesystem;
    const fs::path d =
        fs::temp_directory_path() / ("qchan_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d.string();
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const std::string path = workdir() + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(QCHAN_CLI_BIN) + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

std::vector<double> row_values(const std::string& line) {
  std::vector<double> values;
  std::stringstream stream(line);
  std::string cell;
  while (std::getline(stream, cell, ',')) values.push_back(std::stod(cell));
  return values;
}

struct Fixtures {
  std::string id = write_file("id.json", R"({"kind": "identity"})");
  std::string dep1 = write_file("dep1.json", R"({"kind": "depolarizing", "x": 1.0})");
  std::string dep05 = write_file("dep05.json", R"({"kind": "depolarizing", "x": 0.5})");
  std::string damping = write_file("ad.json", R"({
    "kind": "fano",
    "lambda": [[0.8, 0, 0], [0, 0.8, 0], [0, 0, 0.64]],
    "l": [0, 0, 0.36]})");
  std::string noncp = write_file("noncp.json", R"({
    "kind": "fano",
    "lambda": [[0.8, 0, 0], [0, 0.8, 0], [0, 0, 0.6]],
    "l": [0, 0, 0.4]})");
  std::string outside = write_file("outside.json", R"({"kind": "pauli", "c": [1, 1, -1]})");
  std::string bad_x = write_file("badx.json", R"({"kind": "depolarizing", "x": 1.5})");
  std::string garbage = write_file("garbage.json", "{not json");
};

const Fixtures& fixtures() {
  static const Fixtures f;
  return f;
}

nlohmann::json run_distance_json(const std::string& args) {
  const std::string out = workdir() + "/distance_out.json";
  REQUIRE(run_cli("distance " + args + " --out " + out) == 0);
  return nlohmann::json::parse(read_file(out));
}

}  // namespace

TEST_CASE("distance command reports the choi divergence") {
  const Fixtures& f = fixtures();
  const nlohmann::json doc =
      run_distance_json(f.id + " " + f.dep1 + " --measure d_t_iso");
  CHECK(doc["measure"] == "d_t_iso");
  CHECK(doc["method"] == "choi");
  CHECK(std::abs(doc["value"].get<double>() - 0.740806952380577) < 1e-9);
  CHECK(doc.contains("elapsed_ms"));
}

TEST_CASE("distance command picks closed forms for pauli pairs") {
  const Fixtures& f = fixtures();
  const nlohmann::json k1 =
      run_distance_json(f.id + " " + f.dep1 + " --measure d_t_K1");
  CHECK(k1["method"] == "closed_form");
  CHECK(std::abs(k1["value"].get<double>() - 0.5579230452841438) < 1e-9);
  CHECK(k1["converged"] == true);
  CHECK(k1["axis"].is_number_integer());

  const nlohmann::json k =
      run_distance_json(f.id + " " + f.dep05 + " --measure d_t_K");
  CHECK(k["method"] == "closed_form");
  CHECK(k["k"] == 2);

  const nlohmann::json tr =
      run_distance_json(f.id + " " + f.dep1 + " --measure d_tr_K1");
  CHECK(tr["method"] == "closed_form");
  CHECK(std::abs(tr["value"].get<double>() - 0.5) < 1e-12);
}

TEST_CASE("distance command falls back to the numeric scan") {
  const Fixtures& f = fixtures();
  const nlohmann::json doc =
      run_distance_json(f.damping + " " + f.id + " --measure d_t_K1");
  CHECK(doc["method"] == "grid_refine");
  CHECK(doc["converged"] == true);
  CHECK(std::abs(doc["value"].get<double>() - 0.4568757499822544) < 1e-6);
  CHECK(doc["argmax_re"].size() == 2);
}

TEST_CASE("distance command reports the bounds sandwich") {
  const Fixtures& f = fixtures();
  const nlohmann::json doc =
      run_distance_json(f.id + " " + f.dep1 + " --measure bounds");
  CHECK(doc["all_hold"] == true);
  CHECK(doc["lower"].get<double>() <= doc["value"].get<double>() + 1e-9);
  CHECK(doc["value"].get<double>() <=
        std::min(doc["upper_trace"].get<double>(), doc["upper_entropic"].get<double>()) +
            1e-9);
}

TEST_CASE("structural problems exit with code 2") {
  const Fixtures& f = fixtures();
  CHECK(run_cli("distance " + f.bad_x + " " + f.id) == 2);
  CHECK(run_cli("distance " + f.garbage + " " + f.id) == 2);
  CHECK(run_cli("distance " + workdir() + "/absent.json " + f.id) == 2);
  CHECK(run_cli("distance " + f.id + " " + f.dep1 + " --measure banana") == 2);
  CHECK(run_cli("tetra-surface --radius 1.5") == 2);
  CHECK(run_cli("") == 2);
  CHECK(run_cli("distance " + f.id + " " + f.dep1 + " --frobnicate") == 2);
}

TEST_CASE("physical violations exit with code 3") {
  const Fixtures& f = fixtures();
  CHECK(run_cli("distance " + f.outside + " " + f.id) == 3);
  CHECK(run_cli("distance " + f.noncp + " " + f.id) == 3);
}

TEST_CASE("a starved optimizer exits with code 4") {
  const Fixtures& f = fixtures();
  CHECK(run_cli("distance " + f.damping + " " + f.id + " --measure d_t_K1 --iters 1") == 4);
}

TEST_CASE("teleport-noise sweep matches its endpoints") {
  const std::string out = workdir() + "/teleport.csv";
  REQUIRE(run_cli("teleport-noise --out " + out) == 0);
  const auto lines = lines_of(read_file(out));
  REQUIRE(lines.size() == 102);
  CHECK(lines[0] == "x,dtiso_pf_I,dtiso_pf_D,dtiso_I_D,T_pf_I,T_pf_D,T_I_D,dtK1");

  const auto first = row_values(lines[1]);
  for (double v : first) CHECK(std::abs(v) < 1e-12);

  const auto last = row_values(lines.back());
  CHECK(std::abs(last[0] - 1.0) < 1e-12);
  CHECK(std::abs(last[3] - 0.740806952) < 1e-6);   // dtiso_I_D
  CHECK(std::abs(last[6] - 0.75) < 1e-9);          // T_I_D
  CHECK(std::abs(last[7] - 0.557923045) < 1e-6);   // dtK1

  // interior ordering visible in the table itself
  const auto mid = row_values(lines[51]);
  CHECK(mid[1] < mid[2]);
  CHECK(mid[2] < mid[3]);
}

TEST_CASE("teleport-noise emits parseable json") {
  const std::string out = workdir() + "/teleport.json";
  REQUIRE(run_cli("teleport-noise --x-grid 5 --format json --out " + out) == 0);
  const nlohmann::json rows = nlohmann::json::parse(read_file(out));
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].contains("x"));
  CHECK(std::abs(rows[4]["x"].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("tetra-surface stays inside the band") {
  const std::string out = workdir() + "/surface.csv";
  REQUIRE(run_cli("tetra-surface --grid 16 --radius 0.3 --out " + out) == 0);
  const auto lines = lines_of(read_file(out));
  REQUIRE(lines.size() > 1);
  CHECK(lines[0] == "radius,c1,c2,c3,distance");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = row_values(lines[i]);
    REQUIRE(row.size() == 5);
    CHECK(row[0] == 0.3);
    CHECK(std::abs(row[4] - 0.3) <= 0.01 + 1e-12);
  }
}

TEST_CASE("hamiltonian sweep emits curves and optima") {
  const std::string out = workdir() + "/ham.csv";
  REQUIRE(run_cli("hamiltonian --t-grid 16 --gamma 0.5 --out " + out) == 0);
  const std::string text = read_file(out);
  const auto lines = lines_of(text);
  CHECK(lines[0] == "gamma,t,d_t_iso,d_t_K1,D_B,p_error");
  CHECK(text.find("gamma,measure,t_star,value") != std::string::npos);

  const std::string json_out = workdir() + "/ham.json";
  REQUIRE(run_cli("hamiltonian --t-grid 16 --gamma 0.5 --format json --out " + json_out) == 0);
  const nlohmann::json doc = nlohmann::json::parse(read_file(json_out));
  CHECK(doc.contains("rows"));
  CHECK(doc.contains("optimal_times"));
  CHECK(doc["rows"].is_array());
}

TEST_CASE("bounds-scatter is deterministic per seed") {
  const std::string a = workdir() + "/scatter_a.csv";
  const std::string b = workdir() + "/scatter_b.csv";
  const std::string c = workdir() + "/scatter_c.csv";
  REQUIRE(run_cli("bounds-scatter --pairs 25 --seed 7 --out " + a) == 0);
  REQUIRE(run_cli("bounds-scatter --pairs 25 --seed 7 --out " + b) == 0);
  REQUIRE(run_cli("bounds-scatter --pairs 25 --seed 8 --out " + c) == 0);
  const std::string text_a = read_file(a);
  CHECK(text_a == read_file(b));
  CHECK(text_a != read_file(c));
  CHECK(lines_of(text_a)[0] == "sqrtT,DE,dtiso");
  CHECK(lines_of(text_a).size() == 26);
}
