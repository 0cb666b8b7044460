#include "intrasim/protocol.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace intrasim {

EthernetFrame tag_frame(const EthernetFrame& frame, VlanId vlan) {
    if (frame.vlan_tag) throw std::logic_error("frame already carries a 802.1Q tag");
    EthernetFrame tagged = frame;
    tagged.vlan_tag = vlan;
    return tagged;
}

std::pair<EthernetFrame, VlanId> untag_frame(const EthernetFrame& frame) {
    if (!frame.vlan_tag) throw std::logic_error("frame carries no 802.1Q tag");
    EthernetFrame untagged = frame;
    VlanId vlan = *untagged.vlan_tag;
    untagged.vlan_tag.reset();
    return {untagged, vlan};
}

std::optional<Ipv4Packet> decrement_ttl(const Ipv4Packet& packet) {
    if (packet.ttl <= 1) return std::nullopt;
    Ipv4Packet out = packet;
    out.ttl -= 1;
    return out;
}

namespace {

const char* icmp_subkind(IcmpKind kind) {
    switch (kind) {
        case IcmpKind::echo_request: return "echo-request";
        case IcmpKind::echo_reply: return "echo-reply";
        case IcmpKind::ttl_exceeded: return "ttl-exceeded";
        default: return "dest-unreachable";
    }
}

const char* dhcp_subkind(DhcpKind kind) {
    switch (kind) {
        case DhcpKind::discover: return "dhcp-discover";
        case DhcpKind::offer: return "dhcp-offer";
        case DhcpKind::request: return "dhcp-request";
        case DhcpKind::ack: return "dhcp-ack";
        default: return "dhcp-nak";
    }
}

const char* dns_subkind(DnsKind kind) {
    switch (kind) {
        case DnsKind::query: return "dns-query";
        case DnsKind::answer: return "dns-answer";
        default: return "dns-name-error";
    }
}

const char* tcp_subkind(TcpKind kind) {
    switch (kind) {
        case TcpKind::syn: return "syn";
        case TcpKind::syn_ack: return "syn-ack";
        case TcpKind::ack: return "ack";
        default: return "rst";
    }
}

std::string opt_ip(const std::optional<Ipv4Address>& addr) {
    return addr ? format_ipv4(*addr) : "-";
}

}  // namespace

std::string format_trace_line(uint64_t time_us, const std::string& device,
                              const std::string& port, TraceDirection direction,
                              const EthernetFrame& frame) {
    std::ostringstream out;
    char stamp[24];
    std::snprintf(stamp, sizeof stamp, "t=%012llu",
                  static_cast<unsigned long long>(time_us));
    out << stamp << ' ' << device << ':' << port << ' '
        << (direction == TraceDirection::rx ? "RX" : "TX") << ' ';

    std::string proto;
    std::string subkind;
    std::string src = "-";
    std::string dst = "-";
    std::string ttl = "-";
    std::string tail;
    if (frame.is_arp()) {
        const ArpMessage& arp = frame.arp();
        proto = "ARP";
        subkind = arp.kind == ArpKind::request ? "request" : "reply";
        src = format_ipv4(arp.sender_ip);
        dst = format_ipv4(arp.target_ip);
    } else {
        const Ipv4Packet& ip = frame.ip();
        src = format_ipv4(ip.src);
        dst = format_ipv4(ip.dst);
        ttl = std::to_string(ip.ttl);
        if (ip.protocol() == IpProtocol::icmp) {
            const auto& icmp = std::get<IcmpMessage>(ip.payload);
            proto = "ICMP";
            subkind = icmp_subkind(icmp.kind);
            tail = " id=" + std::to_string(icmp.ident) +
                   " seq=" + std::to_string(icmp.sequence);
        } else if (ip.protocol() == IpProtocol::udp) {
            const auto& udp = std::get<UdpDatagram>(ip.payload);
            proto = "UDP";
            std::string ports = " sport=" + std::to_string(udp.src_port) +
                                " dport=" + std::to_string(udp.dst_port);
            if (std::holds_alternative<DhcpMessage>(udp.payload)) {
                const auto& dhcp = std::get<DhcpMessage>(udp.payload);
                subkind = dhcp_subkind(dhcp.kind);
                tail = ports + " xid=" + std::to_string(dhcp.transaction_id) +
                       " chaddr=" + format_mac(dhcp.client_mac) +
                       " yiaddr=" + opt_ip(dhcp.offered_or_assigned) + " plen=" +
                       (dhcp.prefix_length ? std::to_string(*dhcp.prefix_length)
                                           : std::string("-")) +
                       " gw=" + opt_ip(dhcp.gateway) + " dns=" + opt_ip(dhcp.dns_server);
            } else {
                const auto& dns = std::get<DnsMessage>(udp.payload);
                subkind = dns_subkind(dns.kind);
                tail = ports + " xid=" + std::to_string(dns.transaction_id) +
                       " name=" + dns.name + " addr=" + opt_ip(dns.address);
            }
        } else {
            const auto& tcp = std::get<TcpSegment>(ip.payload);
            proto = "TCP";
            subkind = tcp_subkind(tcp.kind);
            tail = " sport=" + std::to_string(tcp.src_port) +
                   " dport=" + std::to_string(tcp.dst_port);
        }
    }

    out << proto << ' ' << subkind << " src=" << src << " dst=" << dst
        << " smac=" << format_mac(frame.src) << " dmac=" << format_mac(frame.dst)
        << " vlan=" << (frame.vlan_tag ? std::to_string(frame.vlan_tag->id) : "-")
        << " ttl=" << ttl << tail;
    return out.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::string expect_kv(const std::string& token, const std::string& key) {
    if (token.rfind(key + "=", 0) != 0)
        throw std::invalid_argument("trace line: expected " + key + "=, got '" + token + "'");
    return token.substr(key.size() + 1);
}

}  // namespace

TraceFields parse_trace_line(const std::string& line) {
    auto tokens = split_ws(line);
    if (tokens.size() < 11) throw std::invalid_argument("trace line too short: '" + line + "'");

    TraceFields fields;
    std::string stamp = expect_kv(tokens[0], "t");
    if (stamp.size() != 12) throw std::invalid_argument("trace timestamp must be 12 digits");
    fields.time_us = std::stoull(stamp);

    size_t colon = tokens[1].rfind(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("trace endpoint lacks ':': '" + tokens[1] + "'");
    fields.device = tokens[1].substr(0, colon);
    fields.port = tokens[1].substr(colon + 1);

    if (tokens[2] == "RX")
        fields.direction = TraceDirection::rx;
    else if (tokens[2] == "TX")
        fields.direction = TraceDirection::tx;
    else
        throw std::invalid_argument("trace direction must be RX or TX");

    fields.proto = tokens[3];
    if (fields.proto != "ARP" && fields.proto != "ICMP" && fields.proto != "UDP" &&
        fields.proto != "TCP")
        throw std::invalid_argument("unknown trace protocol '" + fields.proto + "'");
    fields.subkind = tokens[4];

    std::string src = expect_kv(tokens[5], "src");
    if (src != "-") fields.src = parse_ipv4(src);
    std::string dst = expect_kv(tokens[6], "dst");
    if (dst != "-") fields.dst = parse_ipv4(dst);
    fields.smac = parse_mac(expect_kv(tokens[7], "smac"));
    fields.dmac = parse_mac(expect_kv(tokens[8], "dmac"));
    std::string vlan = expect_kv(tokens[9], "vlan");
    if (vlan != "-") fields.vlan = make_vlan_id(std::stoi(vlan));
    std::string ttl = expect_kv(tokens[10], "ttl");
    if (ttl != "-") fields.ttl = std::stoi(ttl);
    return fields;
}

}  // namespace intrasim
