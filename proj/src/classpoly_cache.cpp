#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <boost/crc.hpp>
#include <unistd.h>

#include "xdn/classpoly.hpp"
#include "xdn/error.hpp"

namespace xdn {

namespace {

char const * const header_line = "xdn-classpoly 1";

std::string crc_hex(std::string const & body)
{
    boost::crc_32_type crc;
    crc.process_bytes(body.data(), body.size());
    std::ostringstream os;
    os << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
    return os.str();
}

bool parse_bigint(std::string const & s, bigint & out)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            return false;
    }
    out = bigint(s);
    return true;
}

} // namespace

std::string serialize_class_polynomial(ClassPolynomial const & H)
{
    std::ostringstream body;
    body << header_line << '\n';
    body << "D " << H.D << '\n';
    body << "h " << H.degree() << '\n';
    for (int k = 0; k <= H.degree(); ++k)
        body << "c " << k << ' ' << H.coeffs[k] << '\n';
    body << "disc " << H.discPoly << '\n';
    std::string const text = body.str();
    return text + "checksum " + crc_hex(text) + '\n';
}

std::optional<ClassPolynomial> parse_class_polynomial(std::string const & text)
{
    std::size_t const pos = text.rfind("checksum ");
    if (pos == std::string::npos || (pos > 0 && text[pos - 1] != '\n'))
        return std::nullopt;
    std::string const body = text.substr(0, pos);
    std::string tail = text.substr(pos + 9);
    while (!tail.empty() && (tail.back() == '\n' || tail.back() == '\r'))
        tail.pop_back();
    if (tail != crc_hex(body))
        return std::nullopt;

    std::istringstream in(body);
    std::string line;
    if (!std::getline(in, line) || line != header_line)
        return std::nullopt;
    ClassPolynomial H;
    long h = -1;
    std::string key;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        ls >> key;
        if (key == "D") {
            ls >> H.D;
        } else if (key == "h") {
            ls >> h;
        } else if (key == "c") {
            long k;
            std::string v;
            ls >> k >> v;
            bigint c;
            if (k != static_cast<long>(H.coeffs.size()) || !parse_bigint(v, c))
                return std::nullopt;
            H.coeffs.push_back(c);
        } else if (key == "disc") {
            std::string v;
            ls >> v;
            if (!parse_bigint(v, H.discPoly))
                return std::nullopt;
        } else {
            return std::nullopt;
        }
        if (ls.fail())
            return std::nullopt;
    }
    if (H.D >= 0 || h < 1 || static_cast<long>(H.coeffs.size()) != h + 1 || H.coeffs.back() != 1)
        return std::nullopt;
    return H;
}

ClassPolyCache::ClassPolyCache(std::filesystem::path dir)
    : dir_(std::move(dir))
{
}

std::filesystem::path ClassPolyCache::path_for(i64 D) const
{
    return dir_ / ("classpoly_" + std::to_string(D) + ".txt");
}

std::optional<ClassPolynomial> ClassPolyCache::get(i64 D) const
{
    std::ifstream in(path_for(D), std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    auto H = parse_class_polynomial(ss.str());
    if (!H || H->D != D)
        return std::nullopt;
    return H;
}

void ClassPolyCache::put(ClassPolynomial const & H) const
{
    static std::atomic<unsigned long> counter{0};
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        throw error(errc::io_error, "cannot create cache directory " + dir_.string() + ": " + ec.message());
    std::filesystem::path const target = path_for(H.D);
    std::filesystem::path const tmp =
        dir_ / (target.filename().string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw error(errc::io_error, "cannot write " + tmp.string());
        out << serialize_class_polynomial(H);
        out.flush();
        if (!out)
            throw error(errc::io_error, "short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw error(errc::io_error, "cannot replace " + target.string());
    }
}

} // namespace xdn
