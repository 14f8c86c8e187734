#include "diatomic/cache.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

namespace diatomic {

namespace {

constexpr char kMagic[4] = {'D', 'T', 'M', 'C'};
constexpr uint32_t kVersion = 1;

void put_u32(std::ostream& os, uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& os, uint64_t v) {
    put_u32(os, static_cast<uint32_t>(v));
    put_u32(os, static_cast<uint32_t>(v >> 32));
}

uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4)) throw std::runtime_error("cache: truncated file");
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

uint64_t get_u64(std::istream& is) {
    uint64_t lo = get_u32(is);
    uint64_t hi = get_u32(is);
    return lo | (hi << 32);
}

void put_bigint(std::ostream& os, const BigInt& v) {
    unsigned char sign = v < 0 ? 1 : 0;
    os.put(static_cast<char>(sign));
    std::vector<unsigned char> bytes;
    boost::multiprecision::export_bits(v < 0 ? BigInt(-v) : v, std::back_inserter(bytes), 8);
    if (v == 0) bytes.clear();
    put_u32(os, static_cast<uint32_t>(bytes.size()));
    os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

BigInt get_bigint(std::istream& is) {
    int sign = is.get();
    if (sign < 0) throw std::runtime_error("cache: truncated file");
    uint32_t len = get_u32(is);
    if (len > (1u << 20)) throw std::runtime_error("cache: implausible bigint length");
    std::vector<unsigned char> bytes(len);
    if (len && !is.read(reinterpret_cast<char*>(bytes.data()), len))
        throw std::runtime_error("cache: truncated file");
    BigInt v = 0;
    if (!bytes.empty()) boost::multiprecision::import_bits(v, bytes.begin(), bytes.end(), 8);
    return sign ? BigInt(-v) : v;
}

void put_bigint_section(std::ostream& os, const std::string& name, const std::vector<BigInt>& v) {
    os.put(static_cast<char>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    os.put(0);  // element kind 0 = bigint
    put_u64(os, v.size());
    for (const BigInt& x : v) put_bigint(os, x);
}

void put_u32_section(std::ostream& os, const std::string& name, const std::vector<uint32_t>& v) {
    os.put(static_cast<char>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    os.put(1);  // element kind 1 = u32
    put_u64(os, v.size());
    for (uint32_t x : v) put_u32(os, x);
}

}  // namespace

void cache_save(const Workspace& ws, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cache: cannot open '" + path + "' for writing");
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    uint32_t sections = 5;
    put_u32(os, sections);
    put_bigint_section(os, "stern", ws.stern.data());
    put_bigint_section(os, "b", ws.b.data());
    put_bigint_section(os, "r", ws.r.data());
    put_u32_section(os, "sf", ws.sf.data());
    put_bigint_section(os, "c", ws.c.data());
    if (!os) throw std::runtime_error("cache: write failed");
}

void cache_load(Workspace& ws, const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cache: cannot open '" + path + "'");
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("cache: bad magic");
    if (get_u32(is) != kVersion) throw std::runtime_error("cache: unsupported version");
    uint32_t sections = get_u32(is);
    for (uint32_t s = 0; s < sections; ++s) {
        int name_len = is.get();
        if (name_len <= 0) throw std::runtime_error("cache: truncated file");
        std::string name(static_cast<size_t>(name_len), '\0');
        if (!is.read(name.data(), name_len)) throw std::runtime_error("cache: truncated file");
        int kind = is.get();
        uint64_t count = get_u64(is);
        if (count > (1ull << 28)) throw std::runtime_error("cache: implausible section size");
        if (kind == 0) {
            std::vector<BigInt> v(count);
            for (auto& x : v) x = get_bigint(is);
            if (name == "stern") ws.stern.adopt(std::move(v));
            else if (name == "b") ws.b.adopt(std::move(v));
            else if (name == "r") ws.r.adopt(std::move(v));
            else if (name == "c") ws.c.adopt(std::move(v));
            // unknown sections are skipped for forward compatibility
        } else if (kind == 1) {
            std::vector<uint32_t> v(count);
            for (auto& x : v) x = get_u32(is);
            if (name == "sf") ws.sf.adopt(std::move(v));
        } else {
            throw std::runtime_error("cache: unknown section kind");
        }
    }
}

}  // namespace diatomic
