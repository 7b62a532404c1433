// End-to-end tests against the built CLI binary (path injected by CMake).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MEXPART_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(2);
    }
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

int g_failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "[ok] " << what << "\n";
    } else {
        std::cout << "[FAILED] " << what << "\n";
        ++g_failures;
    }
}

using json = nlohmann::json;

json parse(const RunResult& r, const std::string& what) {
    try {
        return json::parse(r.stdout_text);
    } catch (const std::exception& e) {
        check(false, what + " (unparseable JSON: " + e.what() + ")");
        return json::object();
    }
}

}  // namespace

int main() {
    {
        auto r = run("compute --t 2 --n-max 5 --oracle");
        check(r.exit_code == 0, "compute exits 0");
        json j = parse(r, "compute JSON");
        auto rows = j["result"]["rows"];
        check(rows.size() == 6, "compute row count");
        check(rows[5][0] == 5 && rows[5][1] == "4", "compute last row is (5, 4)");
        check(j["result"]["oracle_ok"] == true, "oracle agrees");
        check(j["manifest"]["command"] == "compute", "manifest names the command");
    }
    {
        auto r = run("compute --t 7 --n-max 0");
        json j = parse(r, "compute n-max 0");
        check(j["result"]["rows"][0][1] == "1", "p_{7,7}(0) = 1");
    }
    {
        auto r = run("compute --t 1 --n-max 40 --parity");
        json j = parse(r, "compute parity JSON");
        auto rows = j["result"]["rows"];
        bool ok = true;
        auto pentagonal_type = [](long n) {
            for (long k = 1; k * (3 * k - 1) <= n; ++k)
                if (n == k * (3 * k - 1) || n == k * (3 * k + 1)) return true;
            return false;
        };
        for (long n = 1; n <= 40; ++n)
            ok = ok && (rows[n][1] == (pentagonal_type(n) ? "1" : "0"));
        check(ok, "parity rows odd exactly at k(3k±1)");
    }
    {
        // determinism: identical invocations, identical result digests
        auto r1 = run("density --t 2 --X 150");
        auto r2 = run("density --t 2 --X 150");
        json j1 = parse(r1, "density run 1"), j2 = parse(r2, "density run 2");
        check(j1["result"] == j2["result"], "density results byte-identical");
        check(j1["manifest"]["result_digest"] == j2["manifest"]["result_digest"],
              "density digests identical");
        check(j1["result"]["odd_count"].get<long long>() +
                      j1["result"]["even_count"].get<long long>() ==
                  151,
              "density counts sum to X+1");
    }
    {
        auto r = run("density --t 2 --X 12 --format csv");
        check(r.exit_code == 0, "density csv exits 0");
        check(r.stdout_text.rfind("n,parity\n0,1\n1,1\n", 0) == 0, "density csv header and rows");
    }
    {
        auto r = run("eta-report --builtin H --alpha 1");
        json j = parse(r, "eta-report JSON");
        check(j["result"]["weight"] == 2, "H_1 weight 2");
        check(j["result"]["quotient"]["level"] == 1152, "H_1 level 1152");
        check(j["result"]["cusps"]["holomorphic"] == true, "H_1 holomorphic");
        check(j["result"]["minimal_multiplier"] == 3 && j["result"]["family_multiplier"] == 12,
              "H_1 multipliers: literal 3, family 12");
        check(j["result"]["lemma"]["all_pass"] == true, "H_1 lemma report all-pass");
        auto rs = run("eta-report --builtin S --alpha 1");
        json js = parse(rs, "eta-report S JSON");
        check(js["result"]["weight"] == 3, "S_1 weight 3");
    }
    {
        // custom spec file: Delta = eta(z)^24
        std::string path = "/tmp/mexpart_delta.json";
        std::ofstream(path) << R"({"level": 1, "exps": [[1, 24]]})";
        auto r = run("eta-report --spec-file " + path);
        json j = parse(r, "eta-report spec-file JSON");
        check(j["result"]["weight"] == 12, "Delta weight 12");
        check(j["result"]["minimal_multiplier"] == 1, "Delta already admissible");
        check(j["result"]["cusps"]["min_order"] == "1", "Delta vanishes to order 1");
    }
    {
        auto r = run("hecke --builtin H --alpha 1 --primes 5,7 --T 1400");
        json j = parse(r, "hecke JSON");
        check(j["result"]["trunc_after"] == json::array({280, 40}), "hecke truncations 280, 40");
        check(j["result"].contains("annihilated"), "hecke reports annihilation");
    }
    {
        auto r = run("hecke --builtin H --alpha 1 --primes 5,7 --T 30");
        check(r.exit_code == 3, "insufficient truncation exits 3 (resource cap)");
    }
    {
        auto r = run("verify-identities --alpha-max 1 --T 150");
        check(r.exit_code == 0, "identity suite passes");
        json j = parse(r, "verify JSON");
        check(j["result"]["all_pass"] == true, "identity suite all_pass");
    }
    {
        auto r = run("verify-identities --alpha-max 1 --T 150 --negative-control");
        check(r.exit_code == 1, "negative control fails the suite (exit 1)");
    }
    {
        auto r = run("compute --t 0 --n-max 3");
        check(r.exit_code == 2, "bad t is a usage error (exit 2)");
        auto r2 = run("no-such-command");
        check(r2.exit_code == 2, "unknown subcommand exits 2");
    }
    {
        std::string path = "/tmp/mexpart_config.conf";
        std::ofstream(path) << "# sample\nenumeration_cap = 60\nthreads = 2\n";
        auto r = run("--config " + path + " compute --t 2 --n-max 4 --oracle");
        check(r.exit_code == 0, "config file accepted");
        std::ofstream(path) << "bogus_key = 1\n";
        auto r2 = run("--config " + path + " compute --t 2 --n-max 4");
        check(r2.exit_code == 2, "unknown config key is a usage error");
    }
    {
        auto r = run("compute --t 2 --n-max 6 --mod 3");
        json j = parse(r, "compute mod 3");
        check(j["result"]["rows"][5][1] == "1", "p_{2,2}(5) = 1 mod 3");
    }
    {
        auto r = run("compute --t 2 --n-max 5 --format table");
        check(r.stdout_text.find("5\t4") != std::string::npos, "table format has the (5, 4) row");
    }
    {
        auto r = run("eta-report --builtin H --alpha 1 --expansion 30");
        json j = parse(r, "eta-report with expansion");
        check(j["result"]["expansion_mod2"]["coeffs"][5] == 1,
              "expansion head has coefficient 1 at q^5");
        check(j["result"]["expansion_mod2"]["ring"]["m"] == 2, "expansion head is mod 2");
    }
    {
        auto r = run("hecke --builtin H --alpha 1 --probe --pool 5,7 --max-len 1 --window 16");
        json j = parse(r, "hecke probe");
        check(r.exit_code == 0 && j["result"].contains("found"), "probe reports an outcome");
    }
    {
        std::string path = "/tmp/mexpart_out.json";
        auto r = run("density --t 2 --X 20 --out " + path);
        check(r.exit_code == 0 && r.stdout_text.empty(), "--out silences stdout");
        std::ifstream in(path);
        json j = json::parse(in);
        check(j["result"]["odd_count"].get<long long>() > 0, "--out wrote the report");
    }
    {
        // golden file: the density report shape and values are frozen
        auto r = run("density --t 2 --X 40");
        json j = parse(r, "density for golden comparison");
        std::ifstream golden(std::string(MEXPART_GOLDEN_DIR) + "/density_t2_X40.json");
        check(golden.good() && json::parse(golden) == j["result"],
              "density report matches the golden file");
    }
    {
        // thread count must never change a report
        auto r1 = run("density --t 2 --X 3000");
        std::string env_cmd = "MEXPART_THREADS=4 " + std::string(MEXPART_CLI_PATH) +
                              " density --t 2 --X 3000 2>/dev/null";
        FILE* pipe = popen(env_cmd.c_str(), "r");
        std::string out;
        std::array<char, 4096> buf;
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
        pclose(pipe);
        json j1 = parse(r1, "density single-threaded");
        json j4 = json::parse(out);
        check(j1["result"] == j4["result"], "MEXPART_THREADS leaves the report unchanged");
    }
    {
        auto r = run("compute --t 2 --n-max 4 --parity --mod 3");
        check(r.exit_code == 2, "--parity and --mod are mutually exclusive");
    }
    {
        auto r = run("compute --t 2 --n-max 10 --parity --oracle --emit-series");
        json j = parse(r, "compute parity+oracle+series");
        check(j["result"]["oracle_ok"] == true, "oracle agrees in parity mode");
        check(j["result"]["series"]["trunc"] == 11, "emitted series carries its truncation");
        check(j["result"]["series"]["ring"]["m"] == 2, "emitted series is mod 2");
    }
    {
        // G has an odd exponent sum; the report degrades gracefully
        auto r = run("eta-report --builtin G --alpha 1");
        json j = parse(r, "eta-report G");
        check(r.exit_code == 0 && j["result"].contains("weight_error") &&
                  !j["result"].contains("weight"),
              "half-integral-weight quotient reports weight_error");
        check(j["result"]["cusps"]["entries"].size() > 0, "cusp orders still reported for G");
    }

    if (g_failures > 0) {
        std::cout << g_failures << " CLI check(s) FAILED\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
