#include "plagdetect/unicode.hpp"

namespace plagdetect::unicode {

DecodeResult decode_utf8_lossy(std::string_view bytes) {
    DecodeResult result;
    result.text.reserve(bytes.size());
    const std::size_t size = bytes.size();
    std::size_t i = 0;
    while (i < size) {
        const auto lead = static_cast<unsigned char>(bytes[i]);
        if (lead < 0x80) {
            result.text.push_back(lead);
            ++i;
            continue;
        }
        std::size_t len = 0;
        char32_t cp = 0;
        char32_t min_cp = 0;
        if ((lead & 0xE0) == 0xC0) {
            len = 2;
            cp = lead & 0x1Fu;
            min_cp = 0x80;
        } else if ((lead & 0xF0) == 0xE0) {
            len = 3;
            cp = lead & 0x0Fu;
            min_cp = 0x800;
        } else if ((lead & 0xF8) == 0xF0) {
            len = 4;
            cp = lead & 0x07u;
            min_cp = 0x10000;
        } else {
            result.text.push_back(kReplacement);
            ++result.replacements;
            ++i;
            continue;
        }
        std::size_t consumed = 1;
        bool valid = true;
        while (consumed < len) {
            if (i + consumed >= size ||
                (static_cast<unsigned char>(bytes[i + consumed]) & 0xC0) != 0x80) {
                valid = false;
                break;
            }
            cp = (cp << 6) | (static_cast<unsigned char>(bytes[i + consumed]) & 0x3Fu);
            ++consumed;
        }
        if (valid && (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) {
            valid = false;
        }
        if (valid) {
            result.text.push_back(cp);
            i += len;
        } else {
            // One replacement per maximal bad prefix; resume at the byte that broke it.
            result.text.push_back(kReplacement);
            ++result.replacements;
            i += consumed;
        }
    }
    return result;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        append_utf8(out, cp);
    }
    return out;
}

bool is_word_char(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
               (cp >= 'A' && cp <= 'Z');
    }
    // Pinned delimiter set beyond ASCII: whitespace and the common punctuation
    // blocks. Unknown scripts default to token content.
    if (cp == 0x85 || cp == 0xA0) return false;                  // NEL, NBSP
    if (cp >= 0xA1 && cp <= 0xBF) return false;                  // Latin-1 punctuation
    if (cp == 0xD7 || cp == 0xF7) return false;                  // multiply / divide signs
    if (cp == 0x1680 || cp == 0x180E) return false;              // exotic spaces
    if (cp >= 0x2000 && cp <= 0x206F) return false;              // general punctuation
    if (cp >= 0x2E00 && cp <= 0x2E7F) return false;              // supplemental punctuation
    if (cp >= 0x3000 && cp <= 0x303F) return false;              // CJK punctuation
    if (cp >= 0xFE50 && cp <= 0xFE6F) return false;              // small form variants
    if (cp >= 0xFF01 && cp <= 0xFF0F) return false;              // fullwidth punctuation
    if (cp >= 0xFF1A && cp <= 0xFF20) return false;
    if (cp >= 0xFF3B && cp <= 0xFF40) return false;
    if (cp >= 0xFF5B && cp <= 0xFF65) return false;
    if (cp == 0xFEFF || cp == kReplacement) return false;        // BOM, decode damage
    return true;
}

char32_t to_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;     // Latin-1
    if (cp >= 0x100 && cp <= 0x137) return (cp | 1u);                 // Latin Ext-A pairs
    if (cp >= 0x139 && cp <= 0x148) return ((cp - 1) | 1u) + 1;
    if (cp >= 0x14A && cp <= 0x177) return (cp | 1u);
    if (cp == 0x178) return 0xFF;
    if (cp >= 0x179 && cp <= 0x17E) return ((cp - 1) | 1u) + 1;
    if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;  // Greek
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;                 // Cyrillic
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    return cp;
}

}  // namespace plagdetect::unicode
