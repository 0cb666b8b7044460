// Message model for every simulated layer: Ethernet with an optional
// 802.1Q tag, ARP, IPv4, ICMP echo, UDP carrying DHCP or DNS, and the
// three-message TCP handshake. Messages are immutable values; the trace
// line format at the bottom is the simulator's bit-exact wire surface.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "intrasim/net_core.hpp"

namespace intrasim {

enum class ArpKind { request, reply };

struct ArpMessage {
    ArpKind kind = ArpKind::request;
    MacAddress sender_mac;
    Ipv4Address sender_ip;
    MacAddress target_mac;  // zero in requests
    Ipv4Address target_ip;

    friend bool operator==(const ArpMessage&, const ArpMessage&) = default;
};

enum class IcmpKind { echo_request, echo_reply, ttl_exceeded, dest_unreachable };

struct IcmpMessage {
    IcmpKind kind = IcmpKind::echo_request;
    uint32_t ident = 0;
    uint32_t sequence = 0;

    friend bool operator==(const IcmpMessage&, const IcmpMessage&) = default;
};

enum class DhcpKind { discover, offer, request, ack, nak };

struct DhcpMessage {
    DhcpKind kind = DhcpKind::discover;
    MacAddress client_mac;
    std::optional<Ipv4Address> offered_or_assigned;
    std::optional<int> prefix_length;
    std::optional<Ipv4Address> gateway;
    std::optional<Ipv4Address> dns_server;
    uint32_t transaction_id = 0;

    friend bool operator==(const DhcpMessage&, const DhcpMessage&) = default;
};

enum class DnsKind { query, answer, name_error };

struct DnsMessage {
    DnsKind kind = DnsKind::query;
    std::string name;  // stored lowercase
    std::optional<Ipv4Address> address;
    uint32_t transaction_id = 0;

    friend bool operator==(const DnsMessage&, const DnsMessage&) = default;
};

constexpr int dhcp_server_port = 67;
constexpr int dhcp_client_port = 68;
constexpr int dns_server_port = 53;

struct UdpDatagram {
    int src_port = 0;
    int dst_port = 0;
    std::variant<DhcpMessage, DnsMessage> payload;

    friend bool operator==(const UdpDatagram&, const UdpDatagram&) = default;
};

enum class TcpKind { syn, syn_ack, ack, rst };

struct TcpSegment {
    TcpKind kind = TcpKind::syn;
    int src_port = 0;
    int dst_port = 0;

    friend bool operator==(const TcpSegment&, const TcpSegment&) = default;
};

enum class IpProtocol { icmp, udp, tcp };

constexpr int default_ttl = 64;

struct Ipv4Packet {
    Ipv4Address src;
    Ipv4Address dst;
    int ttl = default_ttl;
    std::variant<IcmpMessage, UdpDatagram, TcpSegment> payload;

    IpProtocol protocol() const {
        switch (payload.index()) {
            case 0: return IpProtocol::icmp;
            case 1: return IpProtocol::udp;
            default: return IpProtocol::tcp;
        }
    }

    friend bool operator==(const Ipv4Packet&, const Ipv4Packet&) = default;
};

struct EthernetFrame {
    MacAddress src;
    MacAddress dst;
    std::optional<VlanId> vlan_tag;
    std::variant<ArpMessage, Ipv4Packet> payload;

    bool is_arp() const { return payload.index() == 0; }
    const ArpMessage& arp() const { return std::get<ArpMessage>(payload); }
    const Ipv4Packet& ip() const { return std::get<Ipv4Packet>(payload); }

    friend bool operator==(const EthernetFrame&, const EthernetFrame&) = default;
};

// Single-tag 802.1Q model. tag_frame throws std::logic_error on an already
// tagged frame, untag_frame on an untagged one.
EthernetFrame tag_frame(const EthernetFrame& frame, VlanId vlan);
std::pair<EthernetFrame, VlanId> untag_frame(const EthernetFrame& frame);

// decrement by exactly one; nullopt means ttl expired (input ttl <= 1) and
// the caller owes the source an icmp ttl-exceeded.
std::optional<Ipv4Packet> decrement_ttl(const Ipv4Packet& packet);

enum class TraceDirection { rx, tx };

// One event per line, fields space separated, fixed order:
//   t=<12-digit zero-padded microseconds> <device>:<port> <RX|TX>
//   <ARP|ICMP|UDP|TCP> <subkind> src=<ip|-> dst=<ip|-> smac=<mac>
//   dmac=<mac> vlan=<id|-> ttl=<n|-> [proto-specific key=value pairs]
//
// Proto-specific tails:
//   ARP   (request|reply)                     - none
//   ICMP  (echo-request|echo-reply|ttl-exceeded|dest-unreachable)
//                                             - id=<n> seq=<n>
//   UDP   dhcp-*: sport= dport= xid= chaddr= yiaddr=<ip|-> plen=<n|->
//                 gw=<ip|-> dns=<ip|->
//         dns-*:  sport= dport= xid= name= addr=<ip|->
//   TCP   (syn|syn-ack|ack|rst)               - sport=<n> dport=<n>
std::string format_trace_line(uint64_t time_us, const std::string& device,
                              const std::string& port, TraceDirection direction,
                              const EthernetFrame& frame);

// The fields a trace line can be parsed back into (used by the round-trip
// property and by trace-grepping tests).
struct TraceFields {
    uint64_t time_us = 0;
    std::string device;
    std::string port;
    TraceDirection direction = TraceDirection::rx;
    std::string proto;    // ARP | ICMP | UDP | TCP
    std::string subkind;
    std::optional<Ipv4Address> src;
    std::optional<Ipv4Address> dst;
    MacAddress smac;
    MacAddress dmac;
    std::optional<VlanId> vlan;
    std::optional<int> ttl;

    friend bool operator==(const TraceFields&, const TraceFields&) = default;
};

TraceFields parse_trace_line(const std::string& line);  // throws on bad lines

}  // namespace intrasim
