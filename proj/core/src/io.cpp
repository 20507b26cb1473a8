#include "gsinc/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "gsinc/errors.hpp"

namespace gsinc {

namespace {

using ordered_json = nlohmann::ordered_json;

nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

std::vector<double> number_array(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array() || j.empty())
        throw InputError(what + " must be a nonempty array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number())
            throw InputError(what + " must be a nonempty array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

DecayClass parse_decay(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw InputError("decay_class needs a 'kind' field");
    const std::string kind = j.value("kind", "");
    try {
        if (kind == "finite")
            return DecayClass::finite();
        if (kind == "geometric")
            return DecayClass::geometric(j.at("param").get<double>());
        if (kind == "power_law")
            return DecayClass::power_law(j.at("param").get<double>());
        if (kind == "custom")
            return DecayClass::custom(j.value("l1_tail", 0.0),
                                      j.value("l2_tail", 0.0));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed decay_class: ") + e.what());
    }
    throw InputError("unknown decay_class kind '" + kind + "'");
}

CoeffSeq coeffs_from_json(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object())
        throw InputError("'" + path + "' must hold a JSON object");
    if (j.contains("blaschke")) {
        const auto params = number_array(j["blaschke"], "blaschke");
        std::size_t n_terms = 64;
        if (j.contains("n_terms")) {
            if (!j["n_terms"].is_number_unsigned())
                throw InputError("n_terms must be a positive integer");
            n_terms = j["n_terms"].get<std::size_t>();
        }
        return BlaschkeGenerator(params).to_series(n_terms).coeffs();
    }
    if (!j.contains("coeffs"))
        throw InputError("'" + path + "' needs either 'coeffs' or 'blaschke'");
    auto coeffs = number_array(j["coeffs"], "coeffs");
    DecayClass decay = DecayClass::finite();
    if (j.contains("decay_class"))
        decay = parse_decay(j["decay_class"]);
    return CoeffSeq(std::move(coeffs), decay);
}

} // namespace

CoeffSeq load_coeffs(const std::string& path) {
    return coeffs_from_json(parse_file(path), path);
}

void save_coeffs(const CoeffSeq& coeffs, const std::string& path) {
    ordered_json j;
    j["coeffs"] = std::vector<double>(coeffs.coeffs().begin(),
                                      coeffs.coeffs().end());
    ordered_json d;
    switch (coeffs.decay().kind) {
    case DecayClass::Kind::Finite:
        d["kind"] = "finite";
        break;
    case DecayClass::Kind::Geometric:
        d["kind"] = "geometric";
        d["param"] = coeffs.decay().param;
        break;
    case DecayClass::Kind::PowerLaw:
        d["kind"] = "power_law";
        d["param"] = coeffs.decay().param;
        break;
    case DecayClass::Kind::Custom:
        d["kind"] = "custom";
        d["l1_tail"] = coeffs.decay().custom_l1_tail;
        d["l2_tail"] = coeffs.decay().custom_l2_tail;
        break;
    }
    j["decay_class"] = d;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

SampledSignal load_signal(const std::string& path) {
    const nlohmann::json j = parse_file(path);
    if (!j.is_object() || !j.contains("kernel") || !j.contains("samples"))
        throw InputError("'" + path + "' needs 'kernel' and 'samples'");
    CoeffSeq coeffs = coeffs_from_json(j["kernel"], path);
    if (!j["samples"].is_object() || j["samples"].empty())
        throw InputError("samples must be a nonempty object of index: value");
    std::map<long, double> samples;
    for (const auto& [key, value] : j["samples"].items()) {
        const char* begin = key.c_str();
        char* end = nullptr;
        const long n = std::strtol(begin, &end, 10);
        if (end != begin + key.size() || key.empty())
            throw InputError("sample index '" + key + "' is not an integer");
        if (!value.is_number())
            throw InputError("sample value at index '" + key + "' is not a number");
        samples[n] = value.get<double>();
    }
    return SampledSignal(GeneralizedSinc(std::move(coeffs)), std::move(samples));
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header) {
    out_ = std::fopen(path.c_str(), "wb");
    if (!out_)
        throw InputError("cannot open '" + path + "' for writing");
    for (std::size_t i = 0; i < header.size(); ++i)
        std::fprintf(out_, "%s%s", i ? "," : "", header[i].c_str());
    std::fputc('\n', out_);
}

CsvWriter::~CsvWriter() {
    if (out_)
        std::fclose(out_);
}

std::string CsvWriter::format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void CsvWriter::write_row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        std::fprintf(out_, "%s%.17g", i ? "," : "", values[i]);
    std::fputc('\n', out_);
}

void CsvWriter::write_row_mixed(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
        std::fprintf(out_, "%s%s", i ? "," : "", cells[i].c_str());
    std::fputc('\n', out_);
}

void write_summary(const std::string& path, const std::string& command,
                   const std::vector<CheckResult>& checks) {
    ordered_json j;
    j["command"] = command;
    bool ok = true;
    for (const auto& c : checks)
        ok = ok && c.pass;
    j["ok"] = ok;
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["value"] = c.value;
        jc["bound"] = c.bound;
        j["checks"].push_back(jc);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

} // namespace gsinc
