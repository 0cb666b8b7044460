// IPv4, MAC and VLAN value types plus the subnet arithmetic everything
// else is built on. All values are immutable plain data.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace intrasim {

struct Ipv4Address {
    uint32_t value = 0;  // 192.168.10.12 == 0xC0A80A0C

    friend constexpr bool operator==(Ipv4Address, Ipv4Address) = default;
    friend constexpr auto operator<=>(Ipv4Address, Ipv4Address) = default;
};

constexpr Ipv4Address ipv4_any{0};
constexpr Ipv4Address ipv4_limited_broadcast{0xFFFFFFFFu};

// Strict dotted-quad parse: exactly four octets 0..255, no leading zeros
// ("01.2.3.4" is rejected to avoid octal ambiguity).
Ipv4Address parse_ipv4(const std::string& text);
std::optional<Ipv4Address> try_parse_ipv4(const std::string& text);
std::string format_ipv4(Ipv4Address addr);

uint32_t prefix_mask(int prefix_length);
Ipv4Address network_address(Ipv4Address addr, int prefix_length);
bool same_subnet(Ipv4Address a, Ipv4Address b, int prefix_length);

// max(2^(32-p) - 2, 0); /31 and /32 both yield 0, no point-to-point case.
uint64_t usable_host_count(int prefix_length);

struct Cidr {
    Ipv4Address network;
    int prefix_length = 0;

    // Throws if host bits are set or the prefix is out of range.
    static Cidr make(Ipv4Address network, int prefix_length);
    // Clears host bits instead of throwing.
    static Cidr of(Ipv4Address addr, int prefix_length);

    bool contains(Ipv4Address addr) const;
    Ipv4Address broadcast() const;
    std::string str() const;

    friend constexpr bool operator==(const Cidr&, const Cidr&) = default;
};

Ipv4Address broadcast_address(const Cidr& cidr);

struct MacAddress {
    uint64_t value = 0;  // low 48 bits

    bool is_broadcast() const { return value == 0xFFFFFFFFFFFFull; }
    bool is_zero() const { return value == 0; }

    friend constexpr bool operator==(MacAddress, MacAddress) = default;
    friend constexpr auto operator<=>(MacAddress, MacAddress) = default;
};

constexpr MacAddress mac_broadcast{0xFFFFFFFFFFFFull};
constexpr MacAddress mac_zero{0};

std::string format_mac(MacAddress mac);
MacAddress parse_mac(const std::string& text);
std::optional<MacAddress> try_parse_mac(const std::string& text);

// Deterministic locally-administered scheme: 02:00:00 OUI + 24-bit counter.
// Throws std::out_of_range once the counter space is exhausted.
MacAddress next_auto_mac(uint32_t counter);

struct VlanId {
    uint16_t id = 1;

    friend constexpr bool operator==(VlanId, VlanId) = default;
    friend constexpr auto operator<=>(VlanId, VlanId) = default;
};

constexpr bool vlan_id_valid(int id) { return id >= 1 && id <= 4094; }
VlanId make_vlan_id(int id);  // throws std::invalid_argument outside 1..4094

struct IpInterfaceConfig {
    Ipv4Address address;
    int prefix_length = 24;
    std::optional<Ipv4Address> gateway;
    std::optional<Ipv4Address> dns_server;

    Cidr subnet() const { return Cidr::of(address, prefix_length); }

    friend constexpr bool operator==(const IpInterfaceConfig&,
                                     const IpInterfaceConfig&) = default;
};

}  // namespace intrasim
