#include <stdio.h>
#include <string.h>
#include <ctype.h>

void clean(char *src, char *dst)
{
    int i, j = 0;
    for (i = 0; src[i] != '\0'; i++) {
        if (isalnum(src[i])) {
            dst[j] = tolower(src[i]);
            j++;
        }
    }
    dst[j] = '\0';
}

int is_palindrome(char *s)
{
    int left = 0;
    int right = strlen(s) - 1;
    while (left < right) {
        if (s[left] != s[right])
            return 0;
        left++;
        right--;
    }
    return 1;
}

void reverse(char *s, char *out)
{
    int n = strlen(s);
    int i;
    for (i = 0; i < n; i++)
        out[i] = s[n - 1 - i];
    out[n] = '\0';
}

int main()
{
    char text[200], letters[200], backwards[200];
    printf("Enter a line of text: ");
    fgets(text, sizeof(text), stdin);
    clean(text, letters);
    reverse(letters, backwards);
    printf("Normalized: %s\n", letters);
    printf("Reversed:   %s\n", backwards);
    if (is_palindrome(letters))
        printf("The text is a palindrome\n");
    else
        printf("The text is not a palindrome\n");
    return 0;
}
