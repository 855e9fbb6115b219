#include "loopkit/descriptor_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {

using nlohmann::json;

std::string position(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

long long as_int(const json &v, const std::string &where)
{
    if (v.is_number_integer())
        return v.get<long long>();
    if (v.is_number_float())
        throw ParseError(where + ": floating point numbers are not accepted");
    throw ParseError(where + ": expected an integer");
}

int as_small_int(const json &v, const std::string &where)
{
    const long long x = as_int(v, where);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw ParseError(where + ": integer out of range");
    return static_cast<int>(x);
}

Rational as_rational(const json &v, const std::string &where)
{
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError &e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (v.is_number_unsigned())
        return Rational(Integer(std::to_string(v.get<unsigned long long>())));
    return Rational(Integer(std::to_string(as_int(v, where))));
}

const json &array_field(const json &doc, const char *key)
{
    const json &v = doc.at(key);
    if (!v.is_array())
        throw ParseError(std::string(key) + ": expected a list");
    return v;
}

} // namespace

nlohmann::ordered_json integer_json(const Integer &x)
{
    if (x.fits_slong_p())
        return static_cast<long long>(x.get_si());
    return x.get_str();
}

nlohmann::ordered_json rational_json(const Rational &x)
{
    if (x.get_den() == 1)
        return integer_json(x.get_num());
    return to_string(x);
}

ManifoldDescriptor parse_descriptor(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        // nlohmann reports the byte just past the offending token.
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        std::string msg = e.what();
        if (const auto colon = msg.rfind(": "); colon != std::string::npos)
            msg = msg.substr(colon + 2);
        throw ParseError("invalid JSON at " + position(text, byte) + ": " + msg);
    }
    if (!doc.is_object())
        throw ParseError("descriptor must be a JSON object");

    static const std::set<std::string> known = {"name", "n", "d", "generator_degrees",
                                                "pairing", "torsion_primes"};
    for (const auto &[key, value] : doc.items())
        if (!known.contains(key))
            throw ParseError("unknown key \"" + key + "\"");
    for (const char *key : {"name", "n", "d", "generator_degrees", "pairing"})
        if (!doc.contains(key))
            throw ParseError(std::string("missing key \"") + key + "\"");

    ManifoldDescriptor desc;
    if (!doc["name"].is_string())
        throw ParseError("name: expected a string");
    desc.name = doc["name"].get<std::string>();
    desc.n = as_small_int(doc["n"], "n");
    desc.d = as_small_int(doc["d"], "d");

    const json &degrees = array_field(doc, "generator_degrees");
    for (std::size_t i = 0; i < degrees.size(); ++i)
        desc.generator_degrees.push_back(
            as_small_int(degrees[i], "generator_degrees[" + std::to_string(i) + "]"));

    const json &pairing = array_field(doc, "pairing");
    for (std::size_t i = 0; i < pairing.size(); ++i) {
        if (!pairing[i].is_array())
            throw ParseError("pairing[" + std::to_string(i) + "]: expected a list");
        std::vector<Rational> row;
        for (std::size_t j = 0; j < pairing[i].size(); ++j)
            row.push_back(as_rational(pairing[i][j], "pairing[" + std::to_string(i) + "][" +
                                                         std::to_string(j) + "]"));
        desc.pairing.push_back(std::move(row));
    }

    if (doc.contains("torsion_primes") && !doc["torsion_primes"].is_null()) {
        const json &primes = array_field(doc, "torsion_primes");
        std::vector<long> ps;
        for (std::size_t i = 0; i < primes.size(); ++i)
            ps.push_back(static_cast<long>(
                as_int(primes[i], "torsion_primes[" + std::to_string(i) + "]")));
        desc.torsion_primes = std::move(ps);
    }
    return desc;
}

ManifoldDescriptor load_descriptor(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_descriptor(buf.str());
}

nlohmann::ordered_json descriptor_to_json(const ManifoldDescriptor &desc)
{
    nlohmann::ordered_json out;
    out["name"] = desc.name;
    out["n"] = desc.n;
    out["d"] = desc.d;
    out["generator_degrees"] = desc.generator_degrees;
    auto pairing = nlohmann::ordered_json::array();
    for (const auto &row : desc.pairing) {
        auto r = nlohmann::ordered_json::array();
        for (const auto &x : row)
            r.push_back(rational_json(x));
        pairing.push_back(std::move(r));
    }
    out["pairing"] = std::move(pairing);
    if (desc.torsion_primes)
        out["torsion_primes"] = *desc.torsion_primes;
    return out;
}

std::string serialize_descriptor(const ManifoldDescriptor &desc)
{
    return descriptor_to_json(desc).dump(2) + "\n";
}

} // namespace loopkit
