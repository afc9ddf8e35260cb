#include "skewlab/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "skewlab/error.hpp"

namespace skewlab {

  char const* to_string(Provenance p) noexcept {
    return p == Provenance::builtin ? "builtin" : "file";
  }

  EndoPtr CatalogEntry::endomorphism(std::string_view name) const {
    for (auto const& e : endomorphisms) {
      if (e->name() == name) {
        return e;
      }
    }
    return nullptr;
  }

  ModulePtr CatalogEntry::module(std::string_view name) const {
    for (auto const& m : modules) {
      if (m->name() == name) {
        return m;
      }
    }
    return nullptr;
  }

  std::vector<EndoPtr> enumerate_endomorphisms(RingPtr const& ring) {
    RingTable const&  r = *ring;
    std::size_t const n = r.size();
    if (n > max_endomorphism_enumeration) {
      throw CapacityError("endomorphism enumeration is limited to rings of at most "
                          + std::to_string(max_endomorphism_enumeration)
                          + " elements; " + r.name() + " has " + std::to_string(n)
                          + ", supply the maps explicitly with 'endo' definitions");
    }
    // Backtracking over map[0..n-1]; a law is checked as soon as all three
    // elements involved are assigned.
    std::vector<std::vector<Elem>> found;
    std::vector<Elem>              map(n, 0);
    std::function<void(Elem)>      extend = [&](Elem i) {
      if (i == n) {
        found.push_back(map);
        return;
      }
      for (Elem v = 0; v < n; ++v) {
        if ((i == r.zero() && v != r.zero()) || (i == r.one() && v != r.one())) {
          continue;
        }
        map[i]  = v;
        bool ok = true;
        for (Elem a = 0; ok && a <= i; ++a) {
          for (Elem b = 0; ok && b <= i; ++b) {
            if (a != i && b != i) {
              continue;
            }
            Elem const s = r.add(a, b);
            Elem const p = r.mul(a, b);
            ok = (s > i || map[s] == r.add(map[a], map[b]))
                 && (p > i || map[p] == r.mul(map[a], map[b]));
          }
        }
        if (ok) {
          extend(i + 1);
        }
      }
    };
    extend(0);

    std::vector<EndoPtr> out;
    for (std::size_t k = 0; k < found.size(); ++k) {
      bool identity = true;
      for (Elem a = 0; a < n; ++a) {
        identity = identity && found[k][a] == a;
      }
      out.push_back(make_endomorphism(ring, found[k], identity ? "id" : "e" + std::to_string(k)));
    }
    return out;
  }

  namespace {

    using BinOp = std::function<Elem(Elem, Elem)>;

    RingPtr table_ring(std::string name, std::size_t n, BinOp add, BinOp mul, Elem one) {
      std::vector<Elem> a(n * n), m(n * n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          a[x * n + y] = add(x, y);
          m[x * n + y] = mul(x, y);
        }
      }
      auto ring = std::make_shared<RingTable const>(std::move(name), n, std::move(a), std::move(m), one);
      if (auto v = verify_ring_axioms(*ring); !v) {
        throw SoundnessAlarm("builtin ring " + ring->name() + ": " + v.violation->to_string());
      }
      return ring;
    }

    RingPtr zn(std::size_t n) {
      return table_ring("z" + std::to_string(n),
                        n,
                        [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); },
                        [n](Elem a, Elem b) { return static_cast<Elem>((a * b) % n); },
                        n > 1 ? 1 : 0);
    }

    // Bit vectors over Z_2: addition is xor.
    Elem bxor(Elem a, Elem b) {
      return a ^ b;
    }

    Elem bit(Elem x, int k) {
      return (x >> k) & 1U;
    }

    RingPtr f4() {
      // 0, 1, alpha, alpha^2 = alpha + 1 as bit vectors 00, 01, 10, 11
      static constexpr int log[] = {-1, 0, 1, 2};
      static constexpr Elem exp[] = {1, 2, 3};
      return table_ring("f4", 4, bxor, [](Elem a, Elem b) -> Elem {
        return a == 0 || b == 0 ? 0 : exp[(log[a] + log[b]) % 3];
      }, 1);
    }

    RingPtr z2t() {
      // a + b t with index a + 2b, t^2 = 0
      return table_ring("z2t", 4, bxor, [](Elem x, Elem y) -> Elem {
        Elem const a = bit(x, 0), b = bit(x, 1), c = bit(y, 0), d = bit(y, 1);
        return (a & c) | (((a & d) ^ (b & c)) << 1);
      }, 1);
    }

    RingPtr z2xz2() {
      // (a, b) with index 2a + b
      return table_ring("z2xz2", 4, bxor, [](Elem x, Elem y) -> Elem { return x & y; }, 3);
    }

    RingPtr t2z2() {
      // [[a, b], [0, c]] with index 4a + 2b + c
      return table_ring("t2z2", 8, bxor, [](Elem x, Elem y) -> Elem {
        Elem const a = bit(x, 2), b = bit(x, 1), c = bit(x, 0);
        Elem const d = bit(y, 2), e = bit(y, 1), f = bit(y, 0);
        return ((a & d) << 2) | (((a & e) ^ (b & f)) << 1) | (c & f);
      }, 5);
    }

    RingPtr m2z2() {
      // [[a, b], [c, d]] with index 8a + 4b + 2c + d
      return table_ring("m2z2", 16, bxor, [](Elem x, Elem y) -> Elem {
        Elem const a = bit(x, 3), b = bit(x, 2), c = bit(x, 1), d = bit(x, 0);
        Elem const p = bit(y, 3), q = bit(y, 2), r = bit(y, 1), s = bit(y, 0);
        return (((a & p) ^ (b & r)) << 3) | (((a & q) ^ (b & s)) << 2)
               | (((c & p) ^ (d & r)) << 1) | ((c & q) ^ (d & s));
      }, 9);
    }

    // Module over ring on {0..size-1} with xor addition.
    ModulePtr bit_module(std::string name, RingPtr const& ring, std::size_t size, BinOp act) {
      std::vector<Elem> add(size * size), action(size * ring->size());
      for (Elem x = 0; x < size; ++x) {
        for (Elem y = 0; y < size; ++y) {
          add[x * size + y] = x ^ y;
        }
        for (Elem a = 0; a < ring->size(); ++a) {
          action[x * ring->size() + a] = act(x, a);
        }
      }
      return std::make_shared<ModuleTable const>(std::move(name), ring, size, std::move(add), std::move(action));
    }

    EndoPtr renamed(EndoPtr const& e, std::string name) {
      std::vector<Elem> map(e->map().begin(), e->map().end());
      return make_endomorphism(e->ring_ptr(), std::move(map), std::move(name));
    }

    // Enumerated endomorphisms, identity first, with known maps named.
    std::vector<EndoPtr> named_endomorphisms(
        RingPtr const& ring,
        std::vector<std::pair<std::vector<Elem>, std::string>> const& names) {
      std::vector<EndoPtr> out;
      for (auto const& e : enumerate_endomorphisms(ring)) {
        std::string name = e->name();
        for (auto const& [map, n] : names) {
          if (std::equal(map.begin(), map.end(), e->map().begin(), e->map().end())) {
            name = n;
          }
        }
        out.push_back(name == e->name() ? e : renamed(e, name));
      }
      std::stable_partition(out.begin(), out.end(), [](EndoPtr const& e) { return e->is_identity(); });
      return out;
    }

    CatalogEntry entry(RingPtr ring, std::vector<EndoPtr> endos) {
      CatalogEntry e;
      e.id            = ring->name();
      e.endomorphisms = std::move(endos);
      e.modules.push_back(std::make_shared<ModuleTable const>(ModuleTable::regular(ring)));
      if (ring->size() > 1) {
        e.modules.push_back(std::make_shared<ModuleTable const>(ModuleTable::zero_module(ring)));
      }
      e.ring = std::move(ring);
      return e;
    }

    void add_quotient(CatalogEntry& e, Elem generator, std::string name) {
      auto const ideal = principal_right_ideal(e.ring, generator).elements;
      e.modules.push_back(
          std::make_shared<ModuleTable const>(ModuleTable::quotient(e.ring, ideal, std::move(name))));
    }

    std::vector<CatalogEntry> build_builtin() {
      std::vector<CatalogEntry> out;

      {
        RingPtr ring = table_ring("zero", 1, [](Elem, Elem) { return Elem{0}; },
                                  [](Elem, Elem) { return Elem{0}; }, 0);
        out.push_back(entry(ring, {identity_endomorphism(ring)}));
      }

      for (std::size_t n : {2, 3, 4, 6, 8}) {
        out.push_back(entry(zn(n), {}));
        out.back().endomorphisms = named_endomorphisms(out.back().ring, {});
      }
      {
        auto ring = zn(12);
        out.push_back(entry(ring, {identity_endomorphism(ring)}));
      }
      auto find = [&](std::string_view id) -> CatalogEntry& {
        return *std::find_if(out.begin(), out.end(), [&](auto const& e) { return e.id == id; });
      };
      add_quotient(find("z4"), 2, "z2");
      add_quotient(find("z6"), 2, "z2");
      add_quotient(find("z6"), 3, "z3");
      add_quotient(find("z8"), 2, "z2");
      add_quotient(find("z8"), 4, "z4");
      add_quotient(find("z12"), 2, "z2");
      add_quotient(find("z12"), 3, "z3");
      add_quotient(find("z12"), 4, "z4");
      add_quotient(find("z12"), 6, "z6");

      {
        auto ring = f4();
        out.push_back(entry(ring, named_endomorphisms(ring, {{{0, 1, 3, 2}, "frobenius"}})));
      }
      {
        auto ring = z2t();
        out.push_back(entry(ring, named_endomorphisms(ring, {{{0, 1, 0, 1}, "kill"}})));
        // Z_2[t]/(t^2) modulo tR: the residue field
        add_quotient(out.back(), 2, "top");
      }
      {
        auto ring = z2xz2();
        out.push_back(entry(ring,
                            named_endomorphisms(ring,
                                                {{{0, 2, 1, 3}, "swap"},
                                                 {{0, 0, 3, 3}, "proj1"},
                                                 {{0, 3, 0, 3}, "proj2"}})));
        // R/(Z_2 x 0) keeps the second coordinate, R/(0 x Z_2) the first
        add_quotient(out.back(), 2, "snd");
        add_quotient(out.back(), 1, "fst");
      }
      {
        auto ring = t2z2();
        out.push_back(entry(ring, {identity_endomorphism(ring)}));
        // [[0,b],[0,c]] and [[a,b],[0,0]] are right ideals; the quotients are
        // Z_2 acted on through a resp. c
        add_quotient(out.back(), 3, "s1");
        add_quotient(out.back(), 6, "s2");
        // (x, y) [[a, b], [0, c]] = (xa, xb + yc), index 2x + y
        out.back().modules.push_back(bit_module("row", ring, 4, [](Elem m, Elem r) -> Elem {
          Elem const x = bit(m, 1), y = bit(m, 0);
          Elem const a = bit(r, 2), b = bit(r, 1), c = bit(r, 0);
          return ((x & a) << 1) | ((x & b) ^ (y & c));
        }));
      }
      {
        auto ring = m2z2();
        out.push_back(entry(ring, {identity_endomorphism(ring)}));
        // (x, y) [[a, b], [c, d]] = (xa + yc, xb + yd)
        out.back().modules.push_back(bit_module("row", ring, 4, [](Elem m, Elem r) -> Elem {
          Elem const x = bit(m, 1), y = bit(m, 0);
          Elem const a = bit(r, 3), b = bit(r, 2), c = bit(r, 1), d = bit(r, 0);
          return (((x & a) ^ (y & c)) << 1) | ((x & b) ^ (y & d));
        }));
      }

      for (auto const& e : out) {
        for (auto const& m : e.modules) {
          if (auto v = verify_module_axioms(*m); !v) {
            throw SoundnessAlarm("builtin module " + e.id + "/" + m->name() + ": "
                                 + v.violation->to_string());
          }
        }
      }
      return out;
    }

    // ---- definition files ----

    struct Token {
      std::string text;
      std::size_t column;
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
      std::size_t        end_column;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      while (!text.empty()) {
        ++number;
        auto const       nl  = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        Line line{number, {}, raw.size() + 1};
        std::size_t i = 0;
        while (i < raw.size()) {
          if (std::isspace(static_cast<unsigned char>(raw[i]))) {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) {
            ++j;
          }
          line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
          i = j;
        }
        if (!line.tokens.empty()) {
          line.end_column = line.tokens.back().column + line.tokens.back().text.size();
          out.push_back(std::move(line));
        }
      }
      return out;
    }

    bool valid_name(std::string_view s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
      });
    }

    class Parser {
     public:
      Parser(std::string_view text, std::string file) : _lines(tokenize(text)), _file(std::move(file)) {}

      std::vector<CatalogEntry> run() {
        while (_pos < _lines.size()) {
          Line const& head = _lines[_pos];
          std::string const& kw = head.tokens[0].text;
          if (kw == "ring") {
            ring();
          } else if (kw == "endo") {
            endo();
          } else if (kw == "module") {
            module();
          } else {
            throw ParseError(_file, head.number, head.tokens[0].column, "'ring', 'endo' or 'module'");
          }
        }
        for (auto& e : _entries) {
          if (!e.endomorphism("id")) {
            e.endomorphisms.insert(e.endomorphisms.begin(), identity_endomorphism(e.ring));
          }
          if (!e.module("regular")) {
            e.modules.push_back(std::make_shared<ModuleTable const>(ModuleTable::regular(e.ring)));
          }
          if (!e.module("zero") && e.ring->size() > 1) {
            e.modules.push_back(std::make_shared<ModuleTable const>(ModuleTable::zero_module(e.ring)));
          }
        }
        return std::move(_entries);
      }

     private:
      [[noreturn]] void expected(Line const& l, std::size_t tok, std::string what) const {
        std::size_t const col = tok < l.tokens.size() ? l.tokens[tok].column : l.end_column;
        throw ParseError(_file, l.number, col, std::move(what));
      }

      Line const& next_line(std::string const& what) {
        if (_pos >= _lines.size()) {
          std::size_t const last = _lines.empty() ? 1 : _lines.back().number;
          std::size_t const col  = _lines.empty() ? 1 : _lines.back().end_column;
          throw ParseError(_file, last, col, what + " before end of file");
        }
        return _lines[_pos++];
      }

      void arity(Line const& l, std::size_t n, std::string const& what) const {
        if (l.tokens.size() < n) {
          expected(l, l.tokens.size(), what);
        }
        if (l.tokens.size() > n) {
          expected(l, n, "end of line");
        }
      }

      std::string name(Line const& l, std::size_t tok) const {
        if (!valid_name(l.tokens[tok].text)) {
          expected(l, tok, "name of letters, digits, '_', '-' or '.'");
        }
        return l.tokens[tok].text;
      }

      std::size_t number(Line const& l, std::size_t tok, std::size_t lo, std::size_t hi) const {
        std::string const& t = l.tokens[tok].text;
        std::size_t        v = 0;
        auto [p, ec]         = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || p != t.data() + t.size() || v < lo || v > hi) {
          expected(l, tok, "integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
        return v;
      }

      void keyword(std::string const& kw) {
        Line const& l = next_line("'" + kw + "'");
        if (l.tokens[0].text != kw) {
          expected(l, 0, "'" + kw + "'");
        }
        arity(l, 1, "'" + kw + "'");
      }

      std::vector<Elem> rows(std::size_t count, std::size_t width, std::size_t bound) {
        std::vector<Elem> out;
        out.reserve(count * width);
        for (std::size_t r = 0; r < count; ++r) {
          Line const& l = next_line("table row");
          arity(l, width, std::to_string(width) + " entries");
          for (std::size_t c = 0; c < width; ++c) {
            out.push_back(static_cast<Elem>(number(l, c, 0, bound - 1)));
          }
        }
        return out;
      }

      CatalogEntry& owner(Line const& l, std::size_t tok) {
        std::string const& ring = l.tokens[tok].text;
        for (auto& e : _entries) {
          if (e.id == ring) {
            return e;
          }
        }
        expected(l, tok, "name of a ring defined earlier in this file");
      }

      void claim(std::string key, Line const& l, std::string const& what) {
        auto [it, fresh] = _seen.emplace(std::move(key), l.number);
        if (!fresh) {
          throw DefinitionError(_file, l.number,
                                "duplicate " + what + " (lines " + std::to_string(it->second)
                                    + " and " + std::to_string(l.number) + ")");
        }
      }

      void ring() {
        Line const& head = next_line("ring header");
        arity(head, 3, "'ring <name> <size>'");
        std::string const n    = name(head, 1);
        std::size_t const size = number(head, 2, 1, 256);
        keyword("add");
        auto add = rows(size, size, size);
        keyword("mul");
        auto        mul = rows(size, size, size);
        Line const& one = next_line("'one <index>'");
        if (one.tokens[0].text != "one") {
          expected(one, 0, "'one'");
        }
        arity(one, 2, "'one <index>'");
        auto const unit = static_cast<Elem>(number(one, 1, 0, size - 1));

        claim("ring " + n, head, "ring name " + n);
        auto ring = std::make_shared<RingTable const>(n, size, std::move(add), std::move(mul), unit);
        if (auto v = verify_ring_axioms(*ring); !v) {
          throw DefinitionError(_file, head.number, "ring " + n + " fails " + v.violation->to_string());
        }
        CatalogEntry e;
        e.id         = n;
        e.ring       = std::move(ring);
        e.provenance = Provenance::file;
        e.source     = _file;
        e.line       = head.number;
        _entries.push_back(std::move(e));
      }

      void endo() {
        Line const& head = next_line("endo header");
        arity(head, 3, "'endo <name> <ring>'");
        std::string const n = name(head, 1);
        CatalogEntry&     e = owner(head, 2);
        auto              map = rows(1, e.ring->size(), e.ring->size());
        claim("endo " + e.id + " " + n, head, "endomorphism " + n + " of " + e.id);
        auto check = verify_endomorphism(e.ring, std::move(map), n);
        if (check.violation) {
          throw DefinitionError(_file, head.number,
                                "endomorphism " + n + " is not " + check.violation->to_string());
        }
        e.endomorphisms.push_back(std::move(check.endomorphism));
      }

      void module() {
        Line const& head = next_line("module header");
        if (head.tokens.size() < 4) {
          expected(head, head.tokens.size(), "'module <name> over <ring> [<size>]'");
        }
        std::string const n = name(head, 1);
        if (head.tokens[2].text != "over") {
          expected(head, 2, "'over'");
        }
        CatalogEntry& e = owner(head, 3);
        ModulePtr     m;
        if (head.tokens.size() == 4) {
          if (n == "regular") {
            m = std::make_shared<ModuleTable const>(ModuleTable::regular(e.ring));
          } else if (n == "zero") {
            m = std::make_shared<ModuleTable const>(ModuleTable::zero_module(e.ring));
          } else {
            expected(head, 4, "module size");
          }
        } else {
          arity(head, 5, "'module <name> over <ring> <size>'");
          std::size_t const size = number(head, 4, 1, 256);
          keyword("add");
          auto add = rows(size, size, size);
          keyword("action");
          auto act = rows(size, e.ring->size(), size);
          m = std::make_shared<ModuleTable const>(n, e.ring, size, std::move(add), std::move(act));
          if (auto v = verify_module_axioms(*m); !v) {
            throw DefinitionError(_file, head.number,
                                  "module " + n + " fails " + v.violation->to_string());
          }
        }
        claim("module " + e.id + " " + n, head, "module " + n + " over " + e.id);
        e.modules.push_back(std::move(m));
      }

      std::vector<Line>                  _lines;
      std::string                        _file;
      std::size_t                        _pos = 0;
      std::vector<CatalogEntry>          _entries;
      std::map<std::string, std::size_t> _seen;
    };

    void table(std::ostringstream& out, std::span<Elem const> t, std::size_t width) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        out << t[i] << (i % width == width - 1 ? "\n" : " ");
      }
    }

  }  // namespace

  std::vector<CatalogEntry> const& builtin_catalog() {
    static std::vector<CatalogEntry> const catalog = build_builtin();
    return catalog;
  }

  std::vector<CatalogEntry> parse_definitions(std::string_view text, std::string const& file) {
    return Parser(text, file).run();
  }

  std::vector<CatalogEntry> load_definitions(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw UsageError("cannot read definition file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_definitions(text.str(), path.string());
  }

  std::string dump_definitions(CatalogEntry const& entry) {
    RingTable const&   r = *entry.ring;
    std::ostringstream out;
    if (r.zero() != 0) {
      throw UnsupportedOperation("definition files require zero at index 0; ring " + r.name()
                                 + " has zero " + std::to_string(r.zero()));
    }
    out << "ring " << r.name() << " " << r.size() << "\nadd\n";
    table(out, r.add_table(), r.size());
    out << "mul\n";
    table(out, r.mul_table(), r.size());
    out << "one " << r.one() << "\n";
    for (auto const& e : entry.endomorphisms) {
      if (e->name() == "id" && e->is_identity()) {
        continue;
      }
      out << "endo " << e->name() << " " << r.name() << "\n";
      table(out, e->map(), r.size());
    }
    for (auto const& m : entry.modules) {
      if ((m->name() == "regular" && m->is_regular())
          || (m->name() == "zero" && *m == ModuleTable::zero_module(entry.ring))) {
        out << "module " << m->name() << " over " << r.name() << "\n";
        continue;
      }
      out << "module " << m->name() << " over " << r.name() << " " << m->size() << "\nadd\n";
      table(out, m->add_table(), m->size());
      out << "action\n";
      table(out, m->action_table(), r.size());
    }
    return out.str();
  }

  Catalog::Catalog() : _entries(builtin_catalog()) {}

  void Catalog::add(std::vector<CatalogEntry> entries) {
    for (auto& e : entries) {
      if (auto const* old = find(e.id)) {
        std::string const where = old->provenance == Provenance::builtin
                                      ? "the builtin catalog"
                                      : old->source + ":" + std::to_string(old->line);
        throw DefinitionError(e.source, e.line, "ring " + e.id + " is already defined in " + where);
      }
      _entries.push_back(std::move(e));
    }
  }

  CatalogEntry const* Catalog::find(std::string_view ring) const {
    for (auto const& e : _entries) {
      if (e.id == ring) {
        return &e;
      }
    }
    return nullptr;
  }

  Instance Catalog::resolve(std::string_view ring,
                            std::string_view sigma,
                            std::string_view module) const {
    auto const* e = find(ring);
    if (!e) {
      std::string known;
      for (auto const& x : _entries) {
        known += (known.empty() ? "" : ", ") + x.id;
      }
      throw UsageError("unknown ring '" + std::string(ring) + "'; known rings: " + known);
    }
    auto s = e->endomorphism(sigma);
    if (!s) {
      std::string known;
      for (auto const& x : e->endomorphisms) {
        known += (known.empty() ? "" : ", ") + x->name();
      }
      throw UsageError("unknown endomorphism '" + std::string(sigma) + "' of " + e->id
                       + "; known: " + known);
    }
    auto m = e->module(module);
    if (!m) {
      std::string known;
      for (auto const& x : e->modules) {
        known += (known.empty() ? "" : ", ") + x->name();
      }
      throw UsageError("unknown module '" + std::string(module) + "' over " + e->id
                       + "; known: " + known);
    }
    return make_instance(e->ring, std::move(s), std::move(m));
  }

  std::vector<Instance> Catalog::instances() const {
    std::vector<Instance> out;
    for (auto const& e : _entries) {
      for (auto const& s : e.endomorphisms) {
        for (auto const& m : e.modules) {
          out.push_back(make_instance(e.ring, s, m));
        }
      }
    }
    std::sort(out.begin(), out.end(), [](Instance const& a, Instance const& b) {
      return a.id() < b.id();
    });
    return out;
  }

}  // namespace skewlab
