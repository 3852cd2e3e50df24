#include "report_json.hpp"

#include <ctime>

#include "hadclique/error.hpp"
#include "hadclique/oracle.hpp"

namespace hadclique::cli {

namespace {

std::string iso8601(std::chrono::system_clock::time_point tp)
{
    const std::time_t tt = std::chrono::system_clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json members_with_k(const Clique& c)
{
    Json out = Json::array();
    for (Code m : c.members) {
        Json entry;
        entry["code"] = m;
        entry["k"] = decode(m, c.t).k();
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace

Json report_body(const SearchReport& report)
{
    Json body;
    body["algorithm"] = report.algorithm;
    body["t"] = report.t;

    Json config = Json::object();
    for (const auto& [key, value] : report.config)
        config[key] = value;
    body["config"] = std::move(config);

    Json essays = Json::array();
    for (const auto& e : report.essays) {
        Json j;
        j["index"] = e.index;
        j["size"] = e.clique.size();
        j["overflow"] = e.overflow;
        j["extended"] = e.extended;
        if (e.best_generation >= 0)
            j["best_generation"] = e.best_generation;
        j["clique"] = e.clique.members;
        if (!e.generations.empty()) {
            Json gens = Json::array();
            for (const auto& g : e.generations) {
                Json gj;
                gj["generation"] = g.generation;
                gj["best"] = g.best;
                gj["worst"] = g.worst;
                gj["mean"] = g.mean;
                gj["child_accepted"] = g.child_accepted;
                gens.push_back(std::move(gj));
            }
            j["generations"] = std::move(gens);
        }
        essays.push_back(std::move(j));
    }
    body["essays"] = std::move(essays);

    const Clique& best = report.best();
    const auto check = oracle::verify_clique(best.t == 0 ? Clique{report.t, {}} : best);
    Json b;
    b["essay"] = report.best_index();
    b["size"] = best.size();
    b["verified"] = check.ok;
    if (check.ok)
        b["members"] = members_with_k(best);
    else
        b["codes"] = best.members;
    body["best"] = std::move(b);

    body["median_size"] = report.median_size();

    Json depth;
    depth["rows"] = report.depth();
    depth["third_threshold"] = report.third_threshold();
    depth["half_threshold"] = report.half_threshold();
    depth["exceeds_third"] = report.depth() > report.third_threshold();
    depth["reaches_half"] = report.depth() >= report.half_threshold();
    body["depth"] = std::move(depth);
    return body;
}

Json timing_section(const SearchReport& report, std::chrono::system_clock::time_point started,
                    std::chrono::system_clock::time_point finished, double total_seconds)
{
    Json timing;
    timing["started_at"] = iso8601(started);
    timing["finished_at"] = iso8601(finished);
    timing["total_seconds"] = total_seconds;
    Json per = Json::array();
    for (const auto& e : report.essays)
        per.push_back(e.seconds);
    timing["essay_seconds"] = std::move(per);
    return timing;
}

Json full_report(const SearchReport& report, std::chrono::system_clock::time_point started,
                 std::chrono::system_clock::time_point finished, double total_seconds)
{
    Json doc;
    doc["report"] = report_body(report);
    doc["timing"] = timing_section(report, started, finished, total_seconds);
    return doc;
}

Clique best_clique_from_report(const Json& doc)
{
    if (!doc.contains("report") || !doc["report"].contains("best") || !doc["report"].contains("t"))
        throw Error(ErrorKind::Parse, "report has no best clique");
    const Json& body = doc["report"];
    if (!body["best"].value("verified", false) || !body["best"].contains("members"))
        throw Error(ErrorKind::InvalidClique, "report marks its best clique as unverified");
    Clique c{body["t"].get<int>(), {}};
    for (const auto& m : body["best"]["members"])
        c.members.push_back(m["code"].get<Code>());
    if (const auto check = oracle::verify_clique(c); !check.ok)
        throw Error(ErrorKind::InvalidClique, check.message);
    return c;
}

} // namespace hadclique::cli
