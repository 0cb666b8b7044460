#include "intrasim/net_core.hpp"

#include <cstdio>

namespace intrasim {

std::optional<Ipv4Address> try_parse_ipv4(const std::string& text) {
    uint32_t value = 0;
    int octets = 0;
    size_t i = 0;
    while (i < text.size()) {
        if (octets == 4) return std::nullopt;
        size_t start = i;
        uint32_t octet = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            octet = octet * 10 + static_cast<uint32_t>(text[i] - '0');
            if (octet > 255) return std::nullopt;
            ++i;
        }
        size_t digits = i - start;
        if (digits == 0 || digits > 3) return std::nullopt;
        if (digits > 1 && text[start] == '0') return std::nullopt;  // no leading zeros
        value = (value << 8) | octet;
        ++octets;
        if (i < text.size()) {
            if (text[i] != '.' || octets == 4) return std::nullopt;
            ++i;
            if (i == text.size()) return std::nullopt;  // trailing dot
        }
    }
    if (octets != 4) return std::nullopt;
    return Ipv4Address{value};
}

Ipv4Address parse_ipv4(const std::string& text) {
    auto addr = try_parse_ipv4(text);
    if (!addr) throw std::invalid_argument("malformed IPv4 address: '" + text + "'");
    return *addr;
}

std::string format_ipv4(Ipv4Address addr) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%u.%u.%u.%u", (addr.value >> 24) & 0xFF,
                  (addr.value >> 16) & 0xFF, (addr.value >> 8) & 0xFF,
                  addr.value & 0xFF);
    return buf;
}

uint32_t prefix_mask(int prefix_length) {
    if (prefix_length < 0 || prefix_length > 32)
        throw std::invalid_argument("prefix length out of range 0..32");
    if (prefix_length == 0) return 0;
    return 0xFFFFFFFFu << (32 - prefix_length);
}

Ipv4Address network_address(Ipv4Address addr, int prefix_length) {
    return Ipv4Address{addr.value & prefix_mask(prefix_length)};
}

bool same_subnet(Ipv4Address a, Ipv4Address b, int prefix_length) {
    return network_address(a, prefix_length) == network_address(b, prefix_length);
}

uint64_t usable_host_count(int prefix_length) {
    if (prefix_length < 0 || prefix_length > 32)
        throw std::invalid_argument("prefix length out of range 0..32");
    uint64_t total = 1ull << (32 - prefix_length);
    return total > 2 ? total - 2 : 0;
}

Cidr Cidr::make(Ipv4Address network, int prefix_length) {
    if ((network.value & ~prefix_mask(prefix_length)) != 0)
        throw std::invalid_argument("host bits set in " + format_ipv4(network) +
                                    "/" + std::to_string(prefix_length));
    return Cidr{network, prefix_length};
}

Cidr Cidr::of(Ipv4Address addr, int prefix_length) {
    return Cidr{network_address(addr, prefix_length), prefix_length};
}

bool Cidr::contains(Ipv4Address addr) const {
    return network_address(addr, prefix_length) == network;
}

Ipv4Address Cidr::broadcast() const {
    return Ipv4Address{network.value | ~prefix_mask(prefix_length)};
}

std::string Cidr::str() const {
    return format_ipv4(network) + "/" + std::to_string(prefix_length);
}

Ipv4Address broadcast_address(const Cidr& cidr) { return cidr.broadcast(); }

std::string format_mac(MacAddress mac) {
    char buf[18];
    std::snprintf(buf, sizeof buf, "%02x:%02x:%02x:%02x:%02x:%02x",
                  unsigned(mac.value >> 40) & 0xFF, unsigned(mac.value >> 32) & 0xFF,
                  unsigned(mac.value >> 24) & 0xFF, unsigned(mac.value >> 16) & 0xFF,
                  unsigned(mac.value >> 8) & 0xFF, unsigned(mac.value) & 0xFF);
    return buf;
}

static int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::optional<MacAddress> try_parse_mac(const std::string& text) {
    if (text.size() != 17) return std::nullopt;
    uint64_t value = 0;
    for (int group = 0; group < 6; ++group) {
        int hi = hex_digit(text[group * 3]);
        int lo = hex_digit(text[group * 3 + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        if (group < 5 && text[group * 3 + 2] != ':') return std::nullopt;
        value = (value << 8) | uint64_t(hi * 16 + lo);
    }
    return MacAddress{value};
}

MacAddress parse_mac(const std::string& text) {
    auto mac = try_parse_mac(text);
    if (!mac) throw std::invalid_argument("malformed MAC address: '" + text + "'");
    return *mac;
}

MacAddress next_auto_mac(uint32_t counter) {
    if (counter >= (1u << 24)) throw std::out_of_range("auto MAC counter exhausted");
    return MacAddress{0x020000000000ull | counter};
}

VlanId make_vlan_id(int id) {
    if (!vlan_id_valid(id))
        throw std::invalid_argument("VLAN id out of range 1..4094: " + std::to_string(id));
    return VlanId{static_cast<uint16_t>(id)};
}

}  // namespace intrasim
