#include "smc/io.hpp"

#include <istream>
#include <sstream>

namespace smc {

namespace {

std::vector<std::string> tokens(const std::string& s)
{
    std::istringstream ss(s);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(std::move(t));
    return out;
}

std::string strip(const std::string& line)
{
    std::string s = line;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

ParseResult parse_instance(std::istream& in)
{
    ParseResult result;
    RawInstance raw;
    RawConstraints raw_cons;
    auto err = [&](int line_no, const std::string& what) {
        result.errors.push_back("line " + std::to_string(line_no) + ": " + what);
    };

    enum class Section { none, workers, firms, prefs, constraints };
    Section section = Section::none;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string s = strip(line);
        if (s.empty()) continue;

        // A bare "name:" line (no whitespace before the colon) opens a section.
        if (s.back() == ':' && s.find_first_of(" \t") == std::string::npos) {
            const std::string name = s.substr(0, s.size() - 1);
            if (name == "workers") section = Section::workers;
            else if (name == "firms") section = Section::firms;
            else if (name == "prefs") section = Section::prefs;
            else if (name == "constraints") section = Section::constraints;
            else err(line_no, "unknown section '" + name + "'");
            continue;
        }

        switch (section) {
            case Section::none:
                err(line_no, "content before any section header");
                break;
            case Section::workers: {
                const auto t = tokens(s);
                if (t.size() != 1) {
                    err(line_no, "expected one worker name");
                    break;
                }
                raw.workers.push_back(t[0]);
                break;
            }
            case Section::firms: {
                const auto t = tokens(s);
                if (t.empty() || t.size() > 2) {
                    err(line_no, "expected 'firm' or 'firm quota'");
                    break;
                }
                int quota = 1;
                if (t.size() == 2) {
                    try {
                        size_t used = 0;
                        quota = std::stoi(t[1], &used);
                        if (used != t[1].size()) throw std::invalid_argument(t[1]);
                    } catch (const std::exception&) {
                        err(line_no, "quota '" + t[1] + "' is not a number");
                        break;
                    }
                    if (quota < 1) {
                        err(line_no, "quota must be at least 1");
                        break;
                    }
                }
                raw.firms.emplace_back(t[0], quota);
                break;
            }
            case Section::prefs: {
                const auto colon = s.find(':');
                if (colon == std::string::npos) {
                    err(line_no, "expected 'name: partner ...'");
                    break;
                }
                const auto owner = tokens(s.substr(0, colon));
                const auto partners = tokens(s.substr(colon + 1));
                if (owner.size() != 1) {
                    err(line_no, "expected one name before ':'");
                    break;
                }
                if (partners.empty()) {
                    err(line_no, "empty preference list");
                    break;
                }
                raw.prefs.emplace_back(owner[0], partners);
                break;
            }
            case Section::constraints: {
                const auto colon = s.find(':');
                if (colon == std::string::npos) {
                    err(line_no, "expected 'kind owner: member ...'");
                    break;
                }
                const auto head = tokens(s.substr(0, colon));
                const auto members = tokens(s.substr(colon + 1));
                if (head.size() != 2) {
                    err(line_no, "expected a kind and an owner before ':'");
                    break;
                }
                if (members.empty()) {
                    err(line_no, "constraint lists no members");
                    break;
                }
                raw_cons.entries.push_back({head[0], head[1], members});
                break;
            }
        }
    }

    if (!result.errors.empty()) return result;

    ValidationResult inst = validate_instance(raw);
    if (!inst.ok()) {
        result.errors = std::move(inst.errors);
        return result;
    }
    ConstraintsValidation cons = validate_constraints(*inst.instance, raw_cons);
    if (!cons.ok()) {
        result.errors = std::move(cons.errors);
        return result;
    }
    result.instance = std::move(inst.instance);
    result.constraints = std::move(*cons.constraints);
    result.contradictions = std::move(cons.contradictions);
    return result;
}

ParseResult parse_instance_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_instance(in);
}

std::string serialize(const Instance& inst, const AssignmentConstraints& ac)
{
    std::ostringstream out;
    out << "workers:\n";
    for (const auto& w : inst.worker_names) out << "  " << w << "\n";
    out << "firms:\n";
    for (int f = 0; f < inst.num_firms(); ++f) {
        out << "  " << inst.firm_names[f];
        if (inst.quota[f] != 1) out << " " << inst.quota[f];
        out << "\n";
    }
    out << "prefs:\n";
    for (int w = 0; w < inst.num_workers(); ++w) {
        out << "  " << inst.worker_names[w] << ":";
        for (int f : inst.worker_pref[w]) out << " " << inst.firm_names[f];
        out << "\n";
    }
    for (int f = 0; f < inst.num_firms(); ++f) {
        out << "  " << inst.firm_names[f] << ":";
        for (int w : inst.firm_pref[f]) out << " " << inst.worker_names[w];
        out << "\n";
    }
    if (!ac.empty()) {
        out << "constraints:\n";
        auto block = [&](const char* kind, const auto& entries, const auto& owner_names,
                         const auto& member_names) {
            for (const auto& [owner, members] : entries) {
                out << "  " << kind << " " << owner_names[owner] << ":";
                for (int m : members) out << " " << member_names[m];
                out << "\n";
            }
        };
        block("f_in", ac.firms_in, inst.worker_names, inst.firm_names);
        block("f_out", ac.firms_out, inst.worker_names, inst.firm_names);
        block("w_in", ac.workers_in, inst.firm_names, inst.worker_names);
        block("w_out", ac.workers_out, inst.firm_names, inst.worker_names);
    }
    return out.str();
}

ValidationResult generate_block_ladder(int n)
{
    ValidationResult result;
    if (n < 4 || n % 2 != 0) {
        result.errors.push_back("block ladder needs an even size of at least 4, got "
                                + std::to_string(n));
        return result;
    }
    RawInstance raw;
    auto wname = [](int k) { return "w" + std::to_string(k); };
    auto fname = [](int k) { return "f" + std::to_string(k); };
    for (int k = 1; k <= n; ++k) raw.workers.push_back(wname(k));
    for (int k = 1; k <= n; ++k) raw.firms.emplace_back(fname(k), 1);
    for (int i = 1; i <= n / 2; ++i) {
        const int a = 2 * i - 1, b = 2 * i;
        raw.prefs.emplace_back(wname(a), std::vector<std::string>{fname(a), fname(b)});
        raw.prefs.emplace_back(wname(b), std::vector<std::string>{fname(b), fname(a)});
        raw.prefs.emplace_back(fname(a), std::vector<std::string>{wname(b), wname(a)});
        raw.prefs.emplace_back(fname(b), std::vector<std::string>{wname(a), wname(b)});
    }
    return validate_instance(raw);
}

AssignmentConstraints ladder_diagonal_forbidden(const Instance& inst, int from_k)
{
    AssignmentConstraints ac;
    const int n = inst.num_workers();
    for (int k = from_k; k <= n; ++k)
        ac.firms_out.emplace_back(k - 1, std::vector<int>{k - 1});
    return ac;
}

}  // namespace smc
