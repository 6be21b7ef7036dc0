#include <crcforge/code_file.hpp>

#include <fstream>
#include <sstream>

namespace crcforge {

namespace {
    [[noreturn]] void malformed(const std::string & why)
    {
        throw Error(Errc::format_error, "malformed code file: " + why);
    }

    auto integer_field(const nlohmann::ordered_json & doc, const char * key) -> long long
    {
        auto it = doc.find(key);
        if (it == doc.end())
            malformed(std::string("missing \"") + key + "\"");
        if (! it->is_number_integer())
            malformed(std::string("\"") + key + "\" must be an integer");
        return it->get<long long>();
    }
}

auto parse_code_file(const std::string & text) -> CodeFile
{
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    }
    catch (const nlohmann::ordered_json::parse_error & e) {
        malformed(e.what());
    }
    if (! doc.is_object())
        malformed("top level must be an object");
    for (auto & [key, value] : doc.items())
        if (key != "format" && key != "n" && key != "q" && key != "codewords" && key != "meta")
            malformed("unknown key \"" + key + "\"");

    auto format = doc.find("format");
    if (format == doc.end() || ! format->is_string() || format->get<std::string>() != code_file_format)
        malformed(std::string("\"format\" must be \"") + code_file_format + "\"");

    long long n = integer_field(doc, "n");
    long long q = integer_field(doc, "q");
    if (n < 1 || n > 64 || q < 2 || q > 1 << 16)
        malformed("n or q out of range");
    Space space = [&] {
        try {
            return Space{static_cast<int>(n), static_cast<int>(q)};
        }
        catch (const Error & e) {
            malformed(e.what());
        }
    }();

    auto words = doc.find("codewords");
    if (words == doc.end() || ! words->is_array())
        malformed("\"codewords\" must be an array");
    Bitset members(static_cast<std::size_t>(space.vertex_count()));
    for (auto & word : *words) {
        if (! word.is_array() || word.size() != static_cast<std::size_t>(n))
            malformed("every codeword must be an array of n symbols");
        std::vector<Symbol> coords;
        for (auto & symbol : word) {
            if (! symbol.is_number_integer() || symbol.get<long long>() < 0 || symbol.get<long long>() >= q)
                malformed("codeword symbols must be integers in 0..q-1");
            coords.push_back(static_cast<Symbol>(symbol.get<long long>()));
        }
        auto v = space.index(Vertex{std::move(coords)});
        if (members.test(v))
            malformed("duplicate codeword " + to_string(space.vertex(v)));
        members.set(v);
    }

    CodeFile file{Code{space, std::move(members)}};
    if (auto meta = doc.find("meta"); meta != doc.end()) {
        if (! meta->is_object())
            malformed("\"meta\" must be an object");
        file.meta = *meta;
    }
    return file;
}

auto read_code_file(const std::string & path) -> CodeFile
{
    std::ifstream in{path, std::ios::binary};
    if (! in)
        throw Error(Errc::format_error, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_code_file(buffer.str());
}

auto serialize_code_file(const CodeFile & file) -> std::string
{
    const auto & space = file.code.space();
    std::string out;
    out += "{\n";
    out += "  \"format\": \"" + std::string(code_file_format) + "\",\n";
    out += "  \"n\": " + std::to_string(space.n()) + ",\n";
    out += "  \"q\": " + std::to_string(space.q()) + ",\n";
    out += "  \"codewords\": [";
    bool first = true;
    file.code.members().for_each_set([&](std::size_t v) {
        out += first ? "\n    [" : ",\n    [";
        first = false;
        for (int p = 0; p < space.n(); ++p)
            out += (p ? "," : "") + std::to_string(space.symbol(v, p));
        out += "]";
    });
    out += first ? "],\n" : "\n  ],\n";
    out += "  \"meta\": " + file.meta.dump() + "\n";
    out += "}\n";
    return out;
}

void write_code_file(const std::string & path, const CodeFile & file)
{
    std::ofstream out{path, std::ios::binary};
    if (! out)
        throw Error(Errc::format_error, "cannot write " + path);
    out << serialize_code_file(file);
}

auto certificate_to_json(const CrcCertificate & cert) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["rho"] = cert.rho;
    j["size"] = cert.code_size;
    j["intersection_array"] = {{"beta", cert.beta}, {"gamma", cert.gamma}};
    j["alpha"] = cert.alpha;
    if (cert.code_eigenvalues)
        j["eigenvalues"] = {cert.code_eigenvalues->first, cert.code_eigenvalues->second};
    j["eigenvalue_index"] = cert.eigenvalue_index ? nlohmann::ordered_json(*cert.eigenvalue_index) : nullptr;
    return j;
}

}
