import { describe, expect, test } from "vitest";

import { EMOJI_CORRECT, EMOJI_INCORRECT, shareCard } from "../src/share.js";

describe("shareCard", () => {
  test("all-correct colon game", () => {
    const card = shareCard("colon", "00000000000000ab", ["Correct", "Correct", "Correct", "Correct"], 0);
    expect(card).toBe(`Colon #00000000\n${EMOJI_CORRECT.repeat(4)}\nMistakes: 0`);
  });

  test("keeps the first eight seed digits only", () => {
    const card = shareCard("authored", "ad5dac18f6489381", ["Correct", "Correct", "Correct"], 0);
    expect(card.split("\n")[0]).toBe("Authored #ad5dac18");
  });

  test("rejected guesses are not rendered", () => {
    const card = shareCard(
      "colon",
      "ca5af6cb9ecc13d4",
      ["Correct", "Rejected", "Incorrect", "Correct", "Correct", "Correct"],
      1,
    );
    expect(card.split("\n")[1]).toBe(
      EMOJI_CORRECT + EMOJI_INCORRECT + EMOJI_CORRECT.repeat(3),
    );
    expect(card.endsWith("Mistakes: 1")).toBe(true);
  });

  test("emoji code points are the green and red squares", () => {
    expect(EMOJI_CORRECT.codePointAt(0)).toBe(0x1f7e9);
    expect(EMOJI_INCORRECT.codePointAt(0)).toBe(0x1f7e5);
  });

  test("uses LF separators and no trailing newline", () => {
    const card = shareCard("colon", "ffffffffffffffff", ["Incorrect", "Correct"], 1);
    expect(card.split("\n")).toHaveLength(3);
    expect(card.includes("\r")).toBe(false);
    expect(card.endsWith("\n")).toBe(false);
  });
});
