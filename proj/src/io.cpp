#include "tagbar/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tagbar
{

namespace
{

struct Line
{
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string const& text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t n = 0;
    while (std::getline(in, raw))
    {
        ++n;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream words(raw);
        Line line{n, {}};
        for (std::string w; words >> w;)
            line.tokens.push_back(w);
        if (!line.tokens.empty())
            out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(Line const& l, std::string const& msg)
{
    throw ParseError("line " + std::to_string(l.number) + ": " + msg);
}

double finite_number(Line const& l, std::string const& token)
{
    ExtReal x;
    try
    {
        x = parse_ext_real(token);
    }
    catch (Error const& e)
    {
        fail(l, e.what());
    }
    if (x.is_infinite())
        fail(l, "expected a finite number, got '" + token + "'");
    return x.value();
}

std::size_t count_token(Line const& l, std::string const& token)
{
    std::size_t pos = 0;
    unsigned long v = 0;
    try
    {
        v = std::stoul(token, &pos);
    }
    catch (std::exception const&)
    {
        fail(l, "expected a non-negative integer, got '" + token + "'");
    }
    if (pos != token.size() || token.front() == '-' || token.front() == '+')
        fail(l, "expected a non-negative integer, got '" + token + "'");
    return v;
}

} // namespace

WeightedComplex ComplexFile::weighted() const
{
    WeightedComplex w;
    if (weights)
        w = WeightedComplex(complex, *weights);
    else if (filter)
        w = filter_to_weights(filtered());
    else
        throw Error("complex file has neither weights nor a filter");
    return order.empty() ? w : w.with_precedences(order);
}

FilteredComplex ComplexFile::filtered() const
{
    if (!filter)
        throw Error("complex file has no filter");
    return {complex, *filter};
}

ComplexFile parse_complex_file(std::string const& text)
{
    auto const lines = tokenize(text);
    std::map<std::size_t, std::vector<Label>> dims;
    struct Declaration
    {
        std::size_t degree;
        std::size_t index;
        std::size_t line;
    };
    std::map<Label, std::vector<Declaration>> where;

    auto const lookup = [&](Line const& l, Label const& label) {
        auto it = where.find(label);
        if (it == where.end())
            fail(l, "undeclared label '" + label + "'");
        if (it->second.size() > 1)
            fail(l, "label '" + label + "' is declared in more than one degree");
        auto const& d = it->second.front();
        if (d.line > l.number)
            fail(l, "label '" + label + "' used before its declaration");
        return std::make_pair(d.degree, d.index);
    };

    std::vector<Line const*> bnd_lines;
    std::vector<Line const*> w_lines;
    std::vector<Line const*> f_lines;
    std::vector<Line const*> order_lines;
    for (auto const& l : lines)
    {
        auto const& key = l.tokens[0];
        if (key == "dim")
        {
            if (l.tokens.size() < 2)
                fail(l, "dim needs a degree");
            std::size_t const k = count_token(l, l.tokens[1]);
            if (dims.count(k))
                fail(l, "degree " + std::to_string(k) + " declared twice");
            auto& basis = dims[k];
            for (std::size_t i = 2; i < l.tokens.size(); ++i)
            {
                auto const& label = l.tokens[i];
                for (auto const& d : where[label])
                    if (d.degree == k)
                        fail(l, "duplicate label '" + label + "' in degree " + std::to_string(k));
                where[label].push_back({k, basis.size(), l.number});
                basis.push_back(label);
            }
        }
        else if (key == "bnd")
            bnd_lines.push_back(&l);
        else if (key == "w")
            w_lines.push_back(&l);
        else if (key == "f")
            f_lines.push_back(&l);
        else if (key == "order")
            order_lines.push_back(&l);
        else
            fail(l, "unknown record '" + key + "'");
    }
    std::size_t const degrees = dims.empty() ? 0 : dims.rbegin()->first + 1;
    std::vector<std::vector<Label>> bases(degrees);
    for (auto& [k, b] : dims)
        bases[k] = b;
    std::vector<Gf2Matrix> bnd;
    for (std::size_t k = 1; k < degrees; ++k)
        bnd.emplace_back(bases[k - 1].size(), bases[k].size());

    std::set<Label> has_bnd;
    for (auto const* l : bnd_lines)
    {
        if (l->tokens.size() < 3 || l->tokens[2] != ":")
            fail(*l, "expected 'bnd <label> : <label>...'");
        auto const [k, a] = lookup(*l, l->tokens[1]);
        if (!has_bnd.insert(l->tokens[1]).second)
            fail(*l, "boundary of '" + l->tokens[1] + "' given twice");
        if (k == 0 && l->tokens.size() > 3)
            fail(*l, "degree 0 element '" + l->tokens[1] + "' cannot have a boundary");
        std::set<Label> seen;
        for (std::size_t i = 3; i < l->tokens.size(); ++i)
        {
            auto const [kb, b] = lookup(*l, l->tokens[i]);
            if (kb + 1 != k)
                fail(*l, "'" + l->tokens[i] + "' is not one degree below '" + l->tokens[1] + "'");
            if (!seen.insert(l->tokens[i]).second)
                fail(*l, "'" + l->tokens[i] + "' repeated");
            bnd[k - 1].set(b, a);
        }
    }

    ComplexFile out;
    out.complex = BasedChainComplex(std::move(bases), std::move(bnd));
    BasedChainComplex const& c = out.complex;

    if (!w_lines.empty() && !f_lines.empty())
        fail(*f_lines.front(), "a file holds either weights or a filter, not both");

    std::size_t pairs = 0;
    for (std::size_t k = 1; k < degrees; ++k)
        pairs += c.dim(k) * c.dim(k - 1);
    // without adjacent pairs the (empty) weight table is complete
    if (!w_lines.empty() || (f_lines.empty() && pairs == 0))
    {
        PairTable<double> table;
        PairTable<char> seen;
        for (std::size_t k = 1; k < degrees; ++k)
        {
            table.emplace_back(c.dim(k), std::vector<double>(c.dim(k - 1), 0.0));
            seen.emplace_back(c.dim(k), std::vector<char>(c.dim(k - 1), 0));
        }
        for (auto const* l : w_lines)
        {
            if (l->tokens.size() != 4)
                fail(*l, "expected 'w <a> <b> <weight>'");
            auto const [ka, a] = lookup(*l, l->tokens[1]);
            auto const [kb, b] = lookup(*l, l->tokens[2]);
            if (kb + 1 != ka)
                fail(*l, "'" + l->tokens[2] + "' is not one degree below '" + l->tokens[1] + "'");
            if (seen[ka - 1][a][b])
                fail(*l, "weight of (" + l->tokens[1] + "," + l->tokens[2] + ") given twice");
            seen[ka - 1][a][b] = 1;
            table[ka - 1][a][b] = finite_number(*l, l->tokens[3]);
        }
        for (std::size_t k = 1; k < degrees; ++k)
            for (std::size_t a = 0; a < c.dim(k); ++a)
                for (std::size_t b = 0; b < c.dim(k - 1); ++b)
                    if (!seen[k - 1][a][b])
                        throw ParseError("missing weight for (" + c.basis(k)[a] + "," + c.basis(k - 1)[b] + ")");
        out.weights = std::move(table);
    }

    if (!f_lines.empty())
    {
        std::vector<std::vector<double>> filter(degrees);
        std::vector<std::vector<char>> seen(degrees);
        for (std::size_t k = 0; k < degrees; ++k)
        {
            filter[k].assign(c.dim(k), 0.0);
            seen[k].assign(c.dim(k), 0);
        }
        for (auto const* l : f_lines)
        {
            if (l->tokens.size() != 3)
                fail(*l, "expected 'f <label> <value>'");
            auto const [k, i] = lookup(*l, l->tokens[1]);
            if (seen[k][i])
                fail(*l, "filter value of '" + l->tokens[1] + "' given twice");
            seen[k][i] = 1;
            filter[k][i] = finite_number(*l, l->tokens[2]);
        }
        for (std::size_t k = 0; k < degrees; ++k)
            for (std::size_t i = 0; i < c.dim(k); ++i)
                if (!seen[k][i])
                    throw ParseError("missing filter value for '" + c.basis(k)[i] + "'");
        out.filter = std::move(filter);
    }

    for (auto const* l : order_lines)
    {
        if (l->tokens.size() != 5)
            fail(*l, "expected 'order <a> <b> <a'> <b'>'");
        std::pair<PairRef, PairRef> p;
        for (int j = 0; j < 2; ++j)
        {
            auto const [ka, a] = lookup(*l, l->tokens[1 + 2 * j]);
            auto const [kb, b] = lookup(*l, l->tokens[2 + 2 * j]);
            if (kb + 1 != ka)
                fail(*l, "'" + l->tokens[2 + 2 * j] + "' is not one degree below '" + l->tokens[1 + 2 * j] + "'");
            (j == 0 ? p.first : p.second) = PairRef{ka, l->tokens[1 + 2 * j], l->tokens[2 + 2 * j]};
        }
        out.order.push_back(std::move(p));
    }
    return out;
}

std::string serialize_complex_file(ComplexFile const& f)
{
    BasedChainComplex const& c = f.complex;
    std::ostringstream os;
    for (std::size_t k = 0; k < c.num_degrees(); ++k)
    {
        os << "dim " << k;
        for (auto const& l : c.basis(k))
            os << ' ' << l;
        os << '\n';
    }
    for (std::size_t k = 1; k < c.num_degrees(); ++k)
    {
        Gf2Matrix const m = c.boundary(k);
        for (std::size_t a = 0; a < c.dim(k); ++a)
        {
            auto const support = m.column_support(a);
            if (support.empty())
                continue;
            os << "bnd " << c.basis(k)[a] << " :";
            for (std::size_t b : support)
                os << ' ' << c.basis(k - 1)[b];
            os << '\n';
        }
    }
    if (f.weights)
        for (std::size_t k = 1; k < c.num_degrees(); ++k)
            for (std::size_t a = 0; a < c.dim(k); ++a)
                for (std::size_t b = 0; b < c.dim(k - 1); ++b)
                    os << "w " << c.basis(k)[a] << ' ' << c.basis(k - 1)[b] << ' '
                       << format_real((*f.weights)[k - 1][a][b]) << '\n';
    if (f.filter)
        for (std::size_t k = 0; k < c.num_degrees(); ++k)
            for (std::size_t i = 0; i < c.dim(k); ++i)
                os << "f " << c.basis(k)[i] << ' ' << format_real((*f.filter)[k][i]) << '\n';
    for (auto const& [x, y] : f.order)
        os << "order " << x.a << ' ' << x.b << ' ' << y.a << ' ' << y.b << '\n';
    return os.str();
}

ComplexFile complex_file_of(WeightedComplex const& w)
{
    ComplexFile f;
    f.complex = w.complex();
    f.weights = w.weights();
    return f;
}

bool looks_simplicial(std::string const& text)
{
    for (auto const& l : tokenize(text))
    {
        auto const& key = l.tokens[0];
        if (key == "v" || key == "s" || key == "pair")
            return true;
        if (key == "dim" || key == "bnd" || key == "w" || key == "f" || key == "order")
            return false;
    }
    return false;
}

SimplicialFile parse_simplicial_file(std::string const& text)
{
    std::vector<std::string> ids;
    std::vector<std::vector<double>> coords;
    std::map<std::string, std::size_t> index;
    std::vector<Simplex> simplices;
    std::vector<std::pair<Line, std::pair<Simplex, Simplex>>> pairs;

    auto const simplex_of = [&](Line const& l, std::size_t from, std::size_t to) {
        Simplex s;
        for (std::size_t i = from; i < to; ++i)
        {
            auto it = index.find(l.tokens[i]);
            if (it == index.end())
                fail(l, "unknown vertex '" + l.tokens[i] + "'");
            s.push_back(it->second);
        }
        if (s.empty())
            fail(l, "empty simplex");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(l, "repeated vertex");
        return s;
    };

    for (auto const& l : tokenize(text))
    {
        auto const& key = l.tokens[0];
        if (key == "v")
        {
            if (l.tokens.size() < 2)
                fail(l, "expected 'v <id> <coordinates>...'");
            if (index.count(l.tokens[1]))
                fail(l, "vertex '" + l.tokens[1] + "' declared twice");
            std::vector<double> c;
            for (std::size_t i = 2; i < l.tokens.size(); ++i)
            {
                std::size_t pos = 0;
                double x = 0.0;
                try
                {
                    x = std::stod(l.tokens[i], &pos);
                }
                catch (std::exception const&)
                {
                    fail(l, "bad coordinate '" + l.tokens[i] + "'");
                }
                if (pos != l.tokens[i].size() || !std::isfinite(x))
                    fail(l, "bad coordinate '" + l.tokens[i] + "'");
                c.push_back(x);
            }
            if (!coords.empty() && c.size() != coords.front().size())
                fail(l, "coordinate dimension differs from earlier vertices");
            index.emplace(l.tokens[1], ids.size());
            ids.push_back(l.tokens[1]);
            coords.push_back(std::move(c));
        }
        else if (key == "s")
            simplices.push_back(simplex_of(l, 1, l.tokens.size()));
        else if (key == "pair")
        {
            auto arrow = std::find(l.tokens.begin(), l.tokens.end(), "->");
            if (arrow == l.tokens.end())
                fail(l, "expected 'pair <vertices> -> <vertices>'");
            auto const split = static_cast<std::size_t>(arrow - l.tokens.begin());
            pairs.push_back({l, {simplex_of(l, 1, split), simplex_of(l, split + 1, l.tokens.size())}});
        }
        else
            fail(l, "unknown record '" + key + "'");
    }

    SimplicialFile out;
    try
    {
        out.complex = SimplicialComplex(std::move(ids), std::move(coords), simplices);
    }
    catch (ParseError const&)
    {
        throw;
    }
    catch (Error const& e)
    {
        throw ParseError(e.what());
    }
    for (auto const& [l, p] : pairs)
    {
        if (!out.complex.contains(p.first) || !out.complex.contains(p.second))
            fail(l, "pair references a simplex that is not in the complex");
        if (!out.field.pairs.emplace(p.first, p.second).second)
            fail(l, "simplex paired twice as a source");
    }
    return out;
}

std::string serialize_simplicial_file(SimplicialFile const& f)
{
    SimplicialComplex const& k = f.complex;
    std::ostringstream os;
    for (std::size_t v = 0; v < k.num_vertices(); ++v)
    {
        os << "v " << k.vertex_id(v);
        for (double x : k.coords(v))
            os << ' ' << format_real(x);
        os << '\n';
    }
    auto const ids = [&](Simplex const& s) {
        std::string out;
        for (std::size_t v : s)
            out += ' ' + k.vertex_id(v);
        return out;
    };
    for (auto const& s : k.maximal_simplices())
        if (s.size() > 1)
            os << "s" << ids(s) << '\n';
    for (auto const& [s, t] : f.field.pairs)
        os << "pair" << ids(s) << " ->" << ids(t) << '\n';
    return os.str();
}

BarcodeFile parse_barcode_file(std::string const& text)
{
    BarcodeFile out;
    std::istringstream in(text);
    std::string raw;
    std::size_t n = 0;
    bool header = false;
    while (std::getline(in, raw))
    {
        ++n;
        std::istringstream words(raw);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;)
            tokens.push_back(w);
        if (tokens.empty())
            continue;
        if (!header)
        {
            if (tokens.size() == 1 && (tokens[0] == "#tagged" || tokens[0] == "#persistence"))
            {
                out.tagged = tokens[0] == "#tagged";
                header = true;
                continue;
            }
            throw ParseError("line " + std::to_string(n) + ": expected '#tagged' or '#persistence' header");
        }
        if (tokens[0].front() == '#')
            continue;
        Line const l{n, tokens};
        if (tokens.size() != 3)
            fail(l, "expected '<degree> <s> <t>'");
        std::size_t const degree = count_token(l, tokens[0]);
        ExtReal s;
        ExtReal t;
        try
        {
            s = parse_ext_real(tokens[1]);
            t = parse_ext_real(tokens[2]);
        }
        catch (Error const& e)
        {
            fail(l, e.what());
        }
        if (out.tagged)
        {
            TaggedInterval const iv{s, t};
            if (auto p = tagged_interval_problem(degree, iv); !p.empty())
                fail(l, to_string(iv) + ": " + p);
            out.tagged_barcode.add(degree, iv);
        }
        else
        {
            Interval const iv{s, t};
            if (auto p = interval_problem(iv); !p.empty())
                fail(l, to_string(iv) + ": " + p);
            out.persistence.add(degree, iv);
        }
    }
    if (!header)
        throw ParseError("empty barcode file: missing header");
    return out;
}

std::string serialize_barcode(TaggedBarcode const& b)
{
    std::ostringstream os;
    os << "#tagged\n";
    for (auto const& [n, slice] : b.slices())
        for (auto const& iv : slice)
            os << n << ' ' << format_real(iv.s) << ' ' << format_real(iv.t) << '\n';
    return os.str();
}

std::string serialize_barcode(IntervalBarcode const& b)
{
    std::ostringstream os;
    os << "#persistence\n";
    for (auto const& [n, slice] : b.slices())
        for (auto const& iv : slice)
            os << n << ' ' << format_real(iv.s) << ' ' << format_real(iv.t) << '\n';
    return os.str();
}

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace tagbar
