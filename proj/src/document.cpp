#include "loopkit/document.hpp"

#include <sstream>

#include "loopkit/descriptor_io.hpp"

namespace loopkit {

namespace {

using ojson = nlohmann::ordered_json;

ojson matrix_json(const RationalMatrix &m)
{
    ojson out = ojson::array();
    for (const auto &row : m) {
        ojson r = ojson::array();
        for (const auto &x : row)
            r.push_back(rational_json(x));
        out.push_back(std::move(r));
    }
    return out;
}

ojson word_json(const Word &w)
{
    ojson out = ojson::array();
    for (std::size_t i = 0; i < w.length(); ++i)
        out.push_back(static_cast<int>(w[i]) + 1);
    return out;
}

ojson presentation_json(const QuadraticPresentation &p, const LoopHomologyReport &rep,
                        const ValidatedManifold &v, const std::vector<Letter> &order)
{
    ojson out;
    out["algebra"] = rep.algebra;
    ojson gens = ojson::array();
    for (std::size_t i = 0; i < p.alphabet->size(); ++i) {
        ojson g;
        g["name"] = letter_name(static_cast<Letter>(i));
        g["cohomology_degree"] = v.descriptor().generator_degrees[i];
        g["loop_degree"] = p.alphabet->degree(static_cast<Letter>(i));
        gens.push_back(std::move(g));
    }
    out["generators"] = std::move(gens);
    out["relation"] = rep.relation;
    out["ungraded_relation"] = rep.ungraded_relation;
    out["relation_degree"] = rep.relation_degree;
    out["leading_pair"] = word_json(p.leading.word());
    ojson ord = ojson::array();
    for (Letter a : order)
        ord.push_back(static_cast<int>(a) + 1);
    out["letter_order"] = std::move(ord);
    out["change_of_basis"] = matrix_json(p.change);
    out["normalized_pairing"] = matrix_json(p.pairing);
    return out;
}

ojson hilbert_json(const LoopHomologyReport &rep, const ReportOptions &opts)
{
    ojson out;
    out["agreement"] = rep.hilbert.agreement;
    out["witt_reconstruction"] = rep.witt_reconstruction;
    out["oracle_max_degree"] = opts.oracle_max_degree;
    ojson rows = ojson::array();
    for (const auto &row : rep.hilbert.rows) {
        ojson r;
        r["degree"] = row.degree;
        ojson entries = ojson::array();
        for (const auto &e : row.entries) {
            ojson j;
            j["provenance"] = to_string(e.provenance);
            j["value"] = e.value ? integer_json(*e.value) : ojson(nullptr);
            if (!e.note.empty())
                j["note"] = e.note;
            entries.push_back(std::move(j));
        }
        r["entries"] = std::move(entries);
        r["complement"] = row.complement ? ojson(*row.complement) : ojson(nullptr);
        r["agree"] = row.agree;
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    return out;
}

ojson decomposition_json(const PiDecomposition &dec)
{
    ojson out;
    out["max_sphere_dimension"] = dec.max_degree;
    ojson mult = ojson::object();
    for (const auto &[j, m] : dec.multiplicities)
        mult[std::to_string(j)] = integer_json(m);
    out["multiplicities"] = std::move(mult);
    ojson wit = ojson::object();
    for (const auto &[j, words] : dec.witnesses) {
        ojson list = ojson::array();
        for (const auto &w : words)
            list.push_back(word_json(w));
        wit[std::to_string(j)] = std::move(list);
    }
    out["witnesses"] = std::move(wit);
    out["caveat"] = dec.caveat;
    return out;
}

ojson moore_json(const MooreReport &m)
{
    ojson out;
    out["applicable"] = m.applicable;
    if (!m.applicable) {
        out["explanation"] = m.explanation;
        return out;
    }
    out["window"] = {m.window_start, m.window_end, m.window_step};
    out["populated"] = m.populated;
    out["first_gap"] = m.first_gap ? ojson(*m.first_gap) : ojson(nullptr);
    out["max_sphere_dimension"] = m.max_sphere_dim;
    out["root_interval"] = {to_string(m.root_low), to_string(m.root_high)};
    out["reference_growth"] = to_decimal(1 / m.root_high, 6);
    ojson ratios = ojson::array();
    for (const auto &g : m.ratios) {
        ojson r;
        r["degree"] = g.degree;
        r["ratio"] = to_string(g.ratio);
        r["decimal"] = to_decimal(g.ratio, 6);
        r["within_5_percent"] = g.within_5_percent;
        ratios.push_back(std::move(r));
    }
    out["ratios"] = std::move(ratios);
    out["conclusion"] = m.conclusion;
    return out;
}

std::string value_text(const ojson &v)
{
    if (v.is_null())
        return "-";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

} // namespace

ojson violations_json(const std::vector<Violation> &violations)
{
    ojson out = ojson::array();
    for (const auto &v : violations) {
        ojson j;
        j["kind"] = to_string(v.kind);
        j["message"] = v.message;
        ojson idx = ojson::array();
        for (auto i : v.indices)
            idx.push_back(i + 1);
        j["generators"] = std::move(idx);
        out.push_back(std::move(j));
    }
    return out;
}

ojson build_report_document(const ValidatedManifold &v, const DocumentOptions &opts)
{
    const int N = opts.max_degree;
    ojson doc;
    doc["input_echo"] = descriptor_to_json(v.descriptor());

    ojson validation;
    validation["valid"] = true;
    validation["r"] = v.r();
    validation["total_rank"] = v.total_rank();
    validation["violations"] = ojson::array();
    doc["validation"] = std::move(validation);

    ojson classification;
    classification["hyperbolicity"] = to_string(hyperbolicity(v));
    ojson caveats = ojson::array();

    if (v.route() == Route::low_rank) {
        classification["type"] = classify_low_rank(v).to_string();
        for (const char *key : {"presentation", "hilbert", "lie_dims", "decomposition",
                                "rational_ranks"})
            doc[key] = nullptr;
        doc["classification"] = std::move(classification);
        doc["moore"] = moore_json(moore_inapplicable(v.r()));
        doc["caveats"] = std::move(caveats);
        return doc;
    }
    classification["type"] = nullptr;

    const NormalizedManifold nm = normalize_basis(v, opts.seed_order);
    const QuadraticPresentation p = build_relation(nm);
    SliceCache cache;
    const LoopHomologyReport rep = loop_homology_report(p, N, &cache, opts.report);
    const PiDecomposition dec = sphere_decomposition(p, N + 1, &cache, opts.report.basis);
    const std::vector<Integer> ranks = rational_ranks(dec, N + 1);
    const MooreReport moore = moore_report(p, dec);

    doc["presentation"] = presentation_json(p, rep, v, nm.letter_order);
    doc["hilbert"] = hilbert_json(rep, opts.report);
    ojson dims = ojson::array();
    for (const auto &x : rep.lie_dims)
        dims.push_back(integer_json(x));
    doc["lie_dims"] = std::move(dims);
    doc["decomposition"] = decomposition_json(dec);
    ojson rr = ojson::object();
    for (std::size_t s = 1; s < ranks.size(); ++s)
        rr[std::to_string(s)] = integer_json(ranks[s]);
    doc["rational_ranks"] = std::move(rr);
    doc["classification"] = std::move(classification);
    doc["moore"] = moore_json(moore);

    caveats.push_back(kPrimeCaveat);
    caveats.push_back("pi_s S^j summands are listed symbolically; torsion homotopy groups of "
                      "spheres are not tabulated");
    if (N > opts.report.oracle_max_degree)
        caveats.push_back("the oracle route (word count minus ideal slice rank) was run up to "
                          "loop degree " +
                          std::to_string(opts.report.oracle_max_degree) + " only");
    doc["caveats"] = std::move(caveats);
    return doc;
}

std::string render_report_text(const ojson &doc)
{
    std::ostringstream out;
    const auto &in = doc["input_echo"];
    out << "manifold " << in["name"].get<std::string>() << ": n=" << in["n"].dump()
        << ", d=" << in["d"].dump() << ", r=" << doc["validation"]["r"].dump() << ", "
        << doc["classification"]["hyperbolicity"].get<std::string>() << "\n";

    if (!doc["classification"]["type"].is_null())
        out << "type: " << doc["classification"]["type"].get<std::string>() << "\n";

    if (!doc["presentation"].is_null()) {
        const auto &p = doc["presentation"];
        out << "\nloop homology: " << p["algebra"].get<std::string>() << "\n";
        out << "  degrees:";
        for (const auto &g : p["generators"])
            out << " |" << g["name"].get<std::string>() << "|=" << g["loop_degree"].dump();
        out << "\n  ungraded relation: " << p["ungraded_relation"].get<std::string>() << "\n";
        out << "  leading pair: " << p["leading_pair"].dump() << ", letter order "
            << p["letter_order"].dump() << "\n";
    }

    if (!doc["hilbert"].is_null()) {
        const auto &h = doc["hilbert"];
        out << "\nhilbert series (series / avoiding-words / oracle)\n";
        for (const auto &row : h["rows"]) {
            out << "  m=" << row["degree"].dump() << ":";
            for (const auto &e : row["entries"])
                out << " " << value_text(e["value"]);
            if (row["complement"].is_boolean())
                out << (row["complement"].get<bool>() ? "  complement ok" : "  complement FAILED");
            if (!row["agree"].get<bool>())
                out << "  DISAGREE";
            out << "\n";
        }
        out << "  agreement: " << (h["agreement"].get<bool>() ? "yes" : "no")
            << ", Witt reconstruction: " << (h["witt_reconstruction"].get<bool>() ? "yes" : "no")
            << "\n";
    }

    if (!doc["lie_dims"].is_null()) {
        out << "\nlie dims:";
        for (const auto &x : doc["lie_dims"])
            out << " " << value_text(x);
        out << "\n";
    }

    if (!doc["decomposition"].is_null()) {
        const auto &d = doc["decomposition"];
        out << "\nsphere summands (dimension: multiplicity)\n ";
        for (const auto &[j, m] : d["multiplicities"].items())
            out << " S^" << j << ":" << value_text(m);
        out << "\n  " << d["caveat"].get<std::string>() << "\n";
    }

    if (!doc["rational_ranks"].is_null()) {
        out << "\nrank pi_s (x) Q:";
        for (const auto &[s, r] : doc["rational_ranks"].items())
            out << " " << s << ":" << value_text(r);
        out << "\n";
    }

    const auto &m = doc["moore"];
    out << "\ngrowth\n";
    if (!m["applicable"].get<bool>()) {
        out << "  " << m["explanation"].get<std::string>() << "\n";
    } else {
        out << "  window " << m["window"].dump() << ", populated "
            << (m["populated"].get<bool>() ? "yes" : "no") << ", largest sphere S^"
            << m["max_sphere_dimension"].dump() << "\n";
        out << "  reference growth 1/rho ~ " << m["reference_growth"].get<std::string>() << "\n";
        for (const auto &r : m["ratios"])
            out << "  a_" << r["degree"].dump() << "/a_prev = " << r["decimal"].get<std::string>()
                << (r["within_5_percent"].get<bool>() ? "  (within 5%)" : "") << "\n";
        out << "  " << m["conclusion"].get<std::string>() << "\n";
    }

    if (!doc["caveats"].empty()) {
        out << "\ncaveats\n";
        for (const auto &c : doc["caveats"])
            out << "  - " << c.get<std::string>() << "\n";
    }
    return out.str();
}

ojson lie_basis_json(const std::vector<LyndonBasisEntry> &basis)
{
    ojson out = ojson::array();
    for (const auto &e : basis) {
        ojson row;
        row["loop_degree"] = e.loop_degree;
        row["word"] = word_json(e.word);
        row["bracket"] = e.bracket.to_string();
        row["sphere_dimension"] = e.sphere_dim;
        out.push_back(std::move(row));
    }
    return out;
}

std::string render_lie_basis_text(const std::vector<LyndonBasisEntry> &basis)
{
    std::ostringstream out;
    out << "degree  sphere  word / bracket\n";
    for (const auto &e : basis)
        out << e.loop_degree << "\tS^" << e.sphere_dim << "\t" << to_string(e.word) << "\t"
            << e.bracket.to_string() << "\n";
    return out.str();
}

} // namespace loopkit
