import type { EditorState, PopupState } from "./controller.js";
import type { TokenInfo } from "./types.js";

/** Monochrome fill bar, proportional to the 0-100 score. */
export function renderScoreBar(fill: HTMLElement, label: HTMLElement, score: number | null): void {
  const value = score ?? 0;
  fill.style.width = `${value}%`;
  label.textContent = score === null ? "–" : score.toFixed(1);
}

/**
 * Annotated mirror of the input text: every token underlined with opacity
 * equal to its attention; highlighted tokens get the yellow accent.
 */
export function renderTokens(container: HTMLElement, text: string, tokens: TokenInfo[]): void {
  container.textContent = "";
  const bytes = new TextEncoder().encode(text);
  const decoder = new TextDecoder();
  let cursor = 0;
  tokens.forEach((token, index) => {
    if (token.byte_start > cursor) {
      container.appendChild(
        document.createTextNode(decoder.decode(bytes.slice(cursor, token.byte_start)))
      );
    }
    const el = document.createElement("span");
    el.textContent = token.text;
    el.className = "token" + (token.highlighted ? " highlighted" : "");
    el.dataset.index = String(index);
    el.style.textDecorationLine = "underline";
    el.style.textDecorationColor = `rgba(0, 0, 0, ${token.attention})`;
    el.style.textDecorationThickness = "2px";
    container.appendChild(el);
    cursor = token.byte_end;
  });
  if (cursor < bytes.length) {
    container.appendChild(document.createTextNode(decoder.decode(bytes.slice(cursor))));
  }
}

/** Candidate list in server order; no client-side re-ranking. */
export function renderPopup(
  popup: HTMLElement,
  state: PopupState | null,
  onPick: (index: number) => void
): void {
  popup.textContent = "";
  if (state === null) {
    popup.hidden = true;
    return;
  }
  popup.hidden = false;
  if (state.spanScore !== null) {
    const scoreLine = document.createElement("div");
    scoreLine.className = "popup-span-score";
    scoreLine.textContent = `Selection toxicity: ${state.spanScore.toFixed(1)}`;
    popup.appendChild(scoreLine);
  }
  const list = document.createElement("ul");
  state.suggestions.candidates.forEach((candidate, index) => {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.type = "button";
    button.textContent =
      (candidate.replacement === "" ? "(delete)" : candidate.replacement) +
      ` → ${candidate.resulting_toxicity.toFixed(1)}`;
    button.addEventListener("click", () => onPick(index));
    item.appendChild(button);
    list.appendChild(item);
  });
  if (state.suggestions.candidates.length === 0) {
    const none = document.createElement("div");
    none.textContent = "No admissible alternatives for this selection.";
    popup.appendChild(none);
  }
  popup.appendChild(list);
}

export function renderStatus(el: HTMLElement, state: EditorState): void {
  if (state.stale) {
    el.textContent = "Offline: showing annotations for an earlier version of the text.";
    el.hidden = false;
  } else {
    el.hidden = true;
  }
}
